//! Dense complex matrices and the single-shift complex QZ algorithm.
//!
//! Solvers are generic over [`Real`](crate::precision::Real); the public
//! entry points in [`eigen`] take [`MPMatrix`] inputs and transparently run
//! in native doubles when the working precision is 53 bits.

mod eigen;
mod givens;
mod hessenberg;
mod matrix;
mod qz;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::precision::{Complex, MPReal, PrecisionError};

pub use eigen::{eigenvalues, eigenvalues_mpfr_only, eigenvalues_standard, Spectrum};
pub use givens::{rotate_cols, rotate_pair, rotate_rows, Rotation, Scratch};
pub use hessenberg::hessenberg_triangular;
pub use matrix::{MPMatrix, Matrix};
pub use qz::qz_iterate;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("{len} entries cannot fill a {rows}x{cols} matrix")]
    EntryCount { rows: usize, cols: usize, len: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("pencil is not in Hessenberg-triangular form")]
    NotHessenbergTriangular,
    #[error("singular pencil: alpha and beta both vanish at index {0}")]
    SingularPencil(usize),
    #[error("QZ iteration did not converge after {sweeps} sweeps")]
    NotConverged { sweeps: usize },
    #[error("invalid QZ configuration: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Precision(#[from] PrecisionError),
}

/// Tuning knobs of the QZ iteration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QZConfig {
    /// Iteration budget is this count times the matrix order.
    pub max_sweeps_per_eigenvalue: usize,
    /// Every this many sweeps without deflation an exceptional shift is used.
    pub exceptional_shift_period: usize,
    /// Multiplier on `ε_P` in the subdiagonal deflation test. The default of
    /// one half was picked against the Godunov convergence runs.
    pub deflation_factor: f64,
    /// Run `P = 53` problems in hardware doubles (bit-identical to MPFR).
    pub allow_native_double: bool,
}

impl Default for QZConfig {
    fn default() -> Self {
        QZConfig {
            max_sweeps_per_eigenvalue: 30,
            exceptional_shift_period: 10,
            deflation_factor: 0.5,
            allow_native_double: true,
        }
    }
}

impl QZConfig {
    pub fn validate(&self) -> Result<(), LinalgError> {
        if self.max_sweeps_per_eigenvalue == 0 {
            return Err(LinalgError::InvalidConfig("max_sweeps_per_eigenvalue must be >= 1"));
        }
        if self.exceptional_shift_period == 0 {
            return Err(LinalgError::InvalidConfig("exceptional_shift_period must be >= 1"));
        }
        if !(self.deflation_factor.is_finite() && self.deflation_factor > 0.0) {
            return Err(LinalgError::InvalidConfig("deflation_factor must be positive"));
        }
        Ok(())
    }
}

/// One eigenvalue `α/β` of a pencil, kept in homogeneous form.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedEigenPair<R = MPReal> {
    pub alpha: Complex<R>,
    pub beta: Complex<R>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QZResult<R = MPReal> {
    /// Diagonal pairs of the final triangular pencil; empty unless converged.
    pub pairs: Vec<GeneralizedEigenPair<R>>,
    pub total_sweeps: usize,
    pub converged: bool,
}
