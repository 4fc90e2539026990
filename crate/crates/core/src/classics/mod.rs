//! The 7×7 Godunov matrices: integer matrices whose spectra are known
//! exactly but are badly conditioned, `A_s = L⁻¹·Ã_s·L`.

use rayon::prelude::*;

use crate::analysis::{hausdorff, AnalysisError};
use crate::densela::{eigenvalues_standard, LinalgError, MPMatrix, QZConfig, Spectrum};
use crate::precision::{MPComplex, MPReal, PrecisionContext, PrecisionError};

const ORDER: usize = 7;

/// `Ã_s` without its last diagonal entry `s`.
const UPPER: [[i64; ORDER]; ORDER] = [
    [1, 2048, 256, 128, 64, 32, 16],
    [0, -2, 1024, 512, 256, 128, 32],
    [0, 0, 4, 512, 1024, 256, 64],
    [0, 0, 0, 0, 512, 512, 128],
    [0, 0, 0, 0, -4, 1024, 256],
    [0, 0, 0, 0, 0, 2, 2048],
    [0, 0, 0, 0, 0, 0, 0],
];

/// Strictly lower entries equal to one in the unit lower triangular `L`.
const L_ONES: [(usize, usize); 6] = [(2, 0), (4, 2), (5, 0), (6, 1), (6, 2), (6, 4)];

#[derive(Debug, thiserror::Error)]
pub enum ClassicsError {
    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
    #[error("no precisions requested")]
    NoPrecisions,
    #[error(transparent)]
    Precision(#[from] PrecisionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

type IntMatrix = [[i64; ORDER]; ORDER];

#[derive(Debug, Clone, PartialEq)]
pub struct GodunovCase {
    pub s: i64,
    pub tilde: IntMatrix,
    pub l: IntMatrix,
    pub l_inv: IntMatrix,
    pub a: IntMatrix,
    /// Eigenvalues with multiplicity, ascending.
    pub true_spectrum: Vec<i64>,
}

fn matmul(x: &IntMatrix, y: &IntMatrix) -> IntMatrix {
    let mut out = [[0i64; ORDER]; ORDER];
    for i in 0..ORDER {
        for k in 0..ORDER {
            for j in 0..ORDER {
                out[i][j] += x[i][k] * y[k][j];
            }
        }
    }
    out
}

/// Inverse of a unit lower triangular integer matrix by forward substitution.
#[allow(clippy::needless_range_loop)]
fn unit_lower_inverse(l: &IntMatrix) -> IntMatrix {
    let mut inv = [[0i64; ORDER]; ORDER];
    for col in 0..ORDER {
        inv[col][col] = 1;
        for i in col + 1..ORDER {
            inv[i][col] = -(col..i).map(|k| l[i][k] * inv[k][col]).sum::<i64>();
        }
    }
    inv
}

impl GodunovCase {
    pub fn build(s: i64) -> Result<Self, ClassicsError> {
        if s != 1 && s != -1 {
            return Err(ClassicsError::InvalidSign(s));
        }
        let mut tilde = UPPER;
        tilde[ORDER - 1][ORDER - 1] = s;
        let mut l = [[0i64; ORDER]; ORDER];
        for (i, row) in l.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j) in &L_ONES {
            l[i][j] = 1;
        }
        let l_inv = unit_lower_inverse(&l);
        let a = matmul(&matmul(&l_inv, &tilde), &l);
        let mut true_spectrum: Vec<i64> = (0..ORDER).map(|i| tilde[i][i]).collect();
        true_spectrum.sort_unstable();
        Ok(GodunovCase {
            s,
            tilde,
            l,
            l_inv,
            a,
            true_spectrum,
        })
    }

    pub fn matrix(&self, ctx: PrecisionContext) -> MPMatrix {
        let rows: Vec<Vec<i64>> = self.a.iter().map(|r| r.to_vec()).collect();
        MPMatrix::from_i64_rows(&rows, ctx)
    }

    pub fn true_points(&self, ctx: PrecisionContext) -> Vec<MPComplex> {
        self.true_spectrum.iter().map(|&v| MPComplex::from_i64(v, 0, ctx)).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..ORDER).map(|i| self.a[i][i]).sum()
    }
}

/// Outcome of solving one Godunov case at one precision.
#[derive(Debug, Clone)]
pub struct GodunovRun {
    pub p: u32,
    pub d_h: MPReal,
    pub spectrum: Spectrum,
    pub wall_time_s: f64,
}

/// Solves `A_s` with `B = Id` at every requested precision (in parallel)
/// and measures the Hausdorff distance to the exact spectrum.
pub fn run_experiment(case: &GodunovCase, ps: &[u32], cfg: &QZConfig) -> Result<Vec<GodunovRun>, ClassicsError> {
    if ps.is_empty() {
        return Err(ClassicsError::NoPrecisions);
    }
    ps.par_iter()
        .map(|&p| {
            let ctx = PrecisionContext::new(p)?;
            let start = std::time::Instant::now();
            let spectrum = eigenvalues_standard(case.matrix(ctx), cfg)?;
            let wall_time_s = start.elapsed().as_secs_f64();
            let d_h = hausdorff(&spectrum.finite, &case.true_points(ctx))?;
            Ok(GodunovRun {
                p,
                d_h,
                spectrum,
                wall_time_s,
            })
        })
        .collect()
}
