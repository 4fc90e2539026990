//! Scalar contract shared by every numerical routine in the crate.
//!
//! All arithmetic happens at an explicit significand width `P` (bits) with
//! round-to-nearest-even. The width travels with each value through a
//! [`PrecisionContext`]; there is no process-global precision setting.
//!
//! Two scalar types implement [`Real`]:
//!
//! * [`MPReal`], backed by MPFR, for any `P >= 2`;
//! * `f64`, which is exactly the `P = 53` round-to-nearest-even format and is
//!   used as a fast path for double-precision runs.

mod complex;
mod decimal;
mod mpreal;
mod native;

use std::fmt;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use rug::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use complex::{Complex, MPComplex};
pub use decimal::{format_rational_decimal, from_decimal, parse_decimal_rational, to_decimal};
pub use mpreal::MPReal;

/// Errors raised by scalar construction and checked arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrecisionError {
    #[error("invalid precision: {0} significand bits (at least 2 required)")]
    InvalidPrecision(u32),
    #[error("division by exact zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeSqrt,
    #[error("precision mismatch: {left} bits vs {right} bits")]
    ContextMismatch { left: u32, right: u32 },
    #[error("malformed decimal string {0:?}")]
    Parse(String),
}

/// Significand width of a binary floating-point format.
///
/// Rounding is always round-to-nearest-even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrecisionContext {
    bits: u32,
}

impl PrecisionContext {
    /// IEEE double precision.
    pub const DOUBLE: PrecisionContext = PrecisionContext { bits: 53 };

    pub fn new(bits: u32) -> Result<Self, PrecisionError> {
        if bits < 2 || bits > rug::float::prec_max() {
            return Err(PrecisionError::InvalidPrecision(bits));
        }
        Ok(PrecisionContext { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// `2 * 2^-P`, the spacing of the format just above one.
    pub fn epsilon(self) -> MPReal {
        MPReal::epsilon(self)
    }

    /// Number of significant decimal digits that guarantees a bit-exact
    /// decimal round trip at this precision.
    pub fn roundtrip_digits(self) -> usize {
        // ceil(P * log10(2)) + 2; the f64 product is far from an integer
        // boundary for every P in the supported range.
        (f64::from(self.bits) * std::f64::consts::LOG10_2).ceil() as usize + 2
    }

    pub(crate) fn check_same(self, other: PrecisionContext) -> Result<(), PrecisionError> {
        if self == other {
            Ok(())
        } else {
            Err(PrecisionError::ContextMismatch {
                left: self.bits,
                right: other.bits,
            })
        }
    }
}

impl fmt::Display for PrecisionContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P={}", self.bits)
    }
}

/// `2 * 2^-P` at precision `P`.
pub fn machine_epsilon(bits: u32) -> Result<MPReal, PrecisionError> {
    Ok(PrecisionContext::new(bits)?.epsilon())
}

/// Real scalar with a fixed significand width, correctly rounded to
/// nearest-even after every operation.
///
/// The compound-assignment operators and [`Real::set_mul`] are the hot-path
/// primitives; they never allocate for [`MPReal`] once the destination exists.
/// Operands are expected to share a context; checked variants live on
/// [`MPReal`].
pub trait Real:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    fn context(&self) -> PrecisionContext;
    fn zero(ctx: PrecisionContext) -> Self;
    fn from_i64(v: i64, ctx: PrecisionContext) -> Self;
    /// Rounds `v` to the target precision.
    fn from_f64(v: f64, ctx: PrecisionContext) -> Self;
    /// Rounds the exact rational `q` once to the target precision.
    fn from_rational(q: &Rational, ctx: PrecisionContext) -> Self;
    /// Rounds an [`MPReal`] to this type's precision (exact when widening).
    fn from_mp(x: &MPReal, ctx: PrecisionContext) -> Self;
    /// Exact conversion to [`MPReal`] at the same precision.
    fn to_mp(&self) -> MPReal;
    fn to_f64(&self) -> f64;

    /// `self = a * b`.
    fn set_mul(&mut self, a: &Self, b: &Self);
    fn set_zero(&mut self);
    fn neg_assign(&mut self);
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_finite(&self) -> bool;
    fn is_sign_negative(&self) -> bool;

    fn one(ctx: PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    fn epsilon(ctx: PrecisionContext) -> Self {
        Self::from_mp(&MPReal::epsilon(ctx), ctx)
    }

    fn plus(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r += rhs;
        r
    }

    fn minus(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r -= rhs;
        r
    }

    fn times(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r *= rhs;
        r
    }

    fn over(&self, rhs: &Self) -> Self {
        let mut r = self.clone();
        r /= rhs;
        r
    }

    fn negated(&self) -> Self {
        let mut r = self.clone();
        r.neg_assign();
        r
    }

    fn max_ref<'a>(&'a self, other: &'a Self) -> &'a Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_values() {
        assert_eq!(machine_epsilon(53).unwrap().to_f64(), 2.220446049250313e-16);
        assert_eq!(machine_epsilon(2).unwrap().to_f64(), 0.5);
        let e113 = machine_epsilon(113).unwrap().to_f64();
        assert!((e113 - 1.9259e-34).abs() < 1e-38, "{e113}");
        let e113 = machine_epsilon(113).unwrap();
        assert_eq!(e113.to_f64(), 2f64.powi(-112));
    }

    #[test]
    fn epsilon_rejects_tiny_precision() {
        assert_eq!(
            machine_epsilon(1).unwrap_err(),
            PrecisionError::InvalidPrecision(1)
        );
        assert!(PrecisionContext::new(0).is_err());
    }

    #[test]
    fn epsilon_halves_per_bit() {
        for p in 2..300u32 {
            let e = machine_epsilon(p).unwrap();
            let e1 = machine_epsilon(p + 1).unwrap();
            let halved = e1.widen(PrecisionContext::new(p + 1).unwrap()).to_rational();
            assert_eq!(e.to_rational(), halved * 2u32);
        }
    }

    #[test]
    fn roundtrip_digit_counts() {
        assert_eq!(PrecisionContext::DOUBLE.roundtrip_digits(), 18);
        assert_eq!(PrecisionContext::new(113).unwrap().roundtrip_digits(), 37);
    }
}
