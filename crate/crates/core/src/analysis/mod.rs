//! Spectrum post-processing: region filtering, Hausdorff distances,
//! convergence sweeps over `(N, P)` and rate fits.

mod distance;
mod rate;
mod region;
mod spectrum;
mod sweep;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::chebtau::ChebError;
use crate::densela::LinalgError;
use crate::precision::PrecisionError;

pub use distance::hausdorff;
pub use rate::{fit_rate, RatePoint};
pub use region::{filter_points, Region};
pub use spectrum::{SpectrumMeta, SpectrumSet};
pub use sweep::{
    convergence_csv, minimal_resolution, obtain, parse_convergence_csv, region_distance, solve_spectrum, sweep, Accuracy, ConvergenceRecord,
    SolveRequest, SpectrumCache, SweepPlan,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("Hausdorff distance is undefined for an empty point set")]
    EmptySet,
    #[error("rate fit needs at least 3 usable points, got {0}")]
    InsufficientPoints(usize),
    #[error("invalid sweep: {0}")]
    InvalidPlan(String),
    #[error("malformed spectrum file: {0}")]
    Format(String),
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error(transparent)]
    Precision(#[from] PrecisionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Cheb(#[from] ChebError),
}

impl AnalysisError {
    pub(crate) fn io(path: &Path, e: std::io::Error) -> Self {
        AnalysisError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        }
    }
}
