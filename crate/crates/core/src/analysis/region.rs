use serde::{Deserialize, Serialize};

use crate::chebtau::FlowProfile;
use crate::precision::MPComplex;

/// Closed axis-aligned box in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Region {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Option<Self> {
        (re_min <= re_max && im_min <= im_max).then_some(Region {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }

    /// Physically relevant wave speeds for a base flow.
    pub fn for_flow(flow: FlowProfile) -> Self {
        let re_min = match flow {
            FlowProfile::Poiseuille => 0.0,
            FlowProfile::Couette => -1.0,
        };
        Region {
            re_min,
            re_max: 1.0,
            im_min: -1.0,
            im_max: 0.0,
        }
    }

    /// Boundary-inclusive membership, compared exactly at the point's precision.
    pub fn contains(&self, z: &MPComplex) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }
}

pub fn filter_points(points: &[MPComplex], q: &Region) -> Vec<MPComplex> {
    points.iter().filter(|z| q.contains(z)).cloned().collect()
}
