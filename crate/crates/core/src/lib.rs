//! Arbitrary-precision spectral solver for hydrodynamic stability problems.
//!
//! * [`precision`]: scalars with an explicit significand width.
//! * [`densela`]: dense complex matrices and the complex QZ algorithm.

pub mod analysis;
pub mod chebtau;
pub mod classics;
pub mod densela;
pub mod precision;

pub use densela::{
    eigenvalues, eigenvalues_standard, GeneralizedEigenPair, LinalgError, MPMatrix, QZConfig, QZResult, Spectrum,
};
pub use precision::{MPComplex, MPReal, PrecisionContext, PrecisionError, Real};
