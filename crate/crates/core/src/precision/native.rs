use rug::{Float, Rational};

use super::{MPReal, PrecisionContext, Real};

// IEEE binary64 with round-to-nearest-even is the P = 53 format. Conversions
// go through MPFR at 53 bits so that rounding matches `MPReal` exactly.
impl Real for f64 {
    #[inline]
    fn context(&self) -> PrecisionContext {
        PrecisionContext::DOUBLE
    }

    #[inline]
    fn zero(ctx: PrecisionContext) -> Self {
        debug_assert_eq!(ctx, PrecisionContext::DOUBLE);
        0.0
    }

    fn from_i64(v: i64, ctx: PrecisionContext) -> Self {
        debug_assert_eq!(ctx, PrecisionContext::DOUBLE);
        Float::with_val(53, v).to_f64()
    }

    fn from_f64(v: f64, ctx: PrecisionContext) -> Self {
        debug_assert_eq!(ctx, PrecisionContext::DOUBLE);
        v
    }

    fn from_rational(q: &Rational, ctx: PrecisionContext) -> Self {
        debug_assert_eq!(ctx, PrecisionContext::DOUBLE);
        Float::with_val(53, q).to_f64()
    }

    fn from_mp(x: &MPReal, ctx: PrecisionContext) -> Self {
        debug_assert_eq!(ctx, PrecisionContext::DOUBLE);
        Float::with_val(53, x.as_float()).to_f64()
    }

    fn to_mp(&self) -> MPReal {
        MPReal::from_float(Float::with_val(53, *self))
    }

    #[inline]
    fn to_f64(&self) -> f64 {
        *self
    }

    #[inline]
    fn set_mul(&mut self, a: &Self, b: &Self) {
        *self = a * b;
    }

    #[inline]
    fn set_zero(&mut self) {
        *self = 0.0;
    }

    #[inline]
    fn neg_assign(&mut self) {
        *self = -*self;
    }

    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn is_sign_negative(&self) -> bool {
        f64::is_sign_negative(*self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        // Elementary operations on f64 agree bit-for-bit with MPFR at P = 53.
        #[test]
        fn matches_mpfr_at_53_bits(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            let ctx = PrecisionContext::DOUBLE;
            let (ma, mb) = (a.to_mp(), b.to_mp());
            prop_assert_eq!(a + b, ma.plus(&mb).to_f64());
            prop_assert_eq!(a - b, ma.minus(&mb).to_f64());
            prop_assert_eq!(a * b, ma.times(&mb).to_f64());
            if b != 0.0 {
                prop_assert_eq!(a / b, ma.over(&mb).to_f64());
            }
            prop_assert_eq!(a.abs().sqrt(), Real::sqrt(&ma.abs()).to_f64());
            prop_assert_eq!(<f64 as Real>::epsilon(ctx), f64::EPSILON);
        }
    }
}
