use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::ops::NegAssign;
use rug::{Assign, Float, Rational};

use super::{PrecisionContext, PrecisionError, Real};

/// Binary floating-point real with a per-value significand width.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct MPReal(Float);

impl MPReal {
    pub fn zero(ctx: PrecisionContext) -> Self {
        MPReal(Float::new(ctx.bits()))
    }

    pub fn from_i64(v: i64, ctx: PrecisionContext) -> Self {
        MPReal(Float::with_val(ctx.bits(), v))
    }

    pub fn from_f64(v: f64, ctx: PrecisionContext) -> Self {
        MPReal(Float::with_val(ctx.bits(), v))
    }

    pub fn from_rational(q: &Rational, ctx: PrecisionContext) -> Self {
        MPReal(Float::with_val(ctx.bits(), q))
    }

    pub fn epsilon(ctx: PrecisionContext) -> Self {
        // 2^(1-P) is a power of two, hence exact at every precision.
        let one = Float::with_val(ctx.bits(), 1);
        MPReal(one >> (ctx.bits() - 1))
    }

    pub fn from_float(f: Float) -> Self {
        MPReal(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn context(&self) -> PrecisionContext {
        PrecisionContext {
            bits: self.0.prec(),
        }
    }

    /// Re-rounds to another precision. Exact whenever `ctx` is at least as
    /// wide as the current precision.
    pub fn widen(&self, ctx: PrecisionContext) -> Self {
        MPReal(Float::with_val(ctx.bits(), &self.0))
    }

    /// Alias of [`MPReal::widen`] for the narrowing direction.
    pub fn round_to(&self, ctx: PrecisionContext) -> Self {
        self.widen(ctx)
    }

    /// Exact value as a rational. Panics on non-finite values.
    pub fn to_rational(&self) -> Rational {
        self.0.to_rational().expect("finite value")
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Natural logarithm evaluated at the value's precision, returned as f64.
    /// Unlike `to_f64().ln()` this does not underflow for tiny values.
    pub fn ln_f64(&self) -> f64 {
        Float::with_val(self.0.prec(), self.0.ln_ref()).to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, PrecisionError> {
        self.context().check_same(rhs.context())?;
        Ok(MPReal(Float::with_val(self.0.prec(), &self.0 + &rhs.0)))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, PrecisionError> {
        self.context().check_same(rhs.context())?;
        Ok(MPReal(Float::with_val(self.0.prec(), &self.0 - &rhs.0)))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, PrecisionError> {
        self.context().check_same(rhs.context())?;
        Ok(MPReal(Float::with_val(self.0.prec(), &self.0 * &rhs.0)))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, PrecisionError> {
        self.context().check_same(rhs.context())?;
        if rhs.0.is_zero() {
            return Err(PrecisionError::DivisionByZero);
        }
        Ok(MPReal(Float::with_val(self.0.prec(), &self.0 / &rhs.0)))
    }

    pub fn try_sqrt(&self) -> Result<Self, PrecisionError> {
        if self.0.is_sign_negative() && !self.0.is_zero() {
            return Err(PrecisionError::NegativeSqrt);
        }
        Ok(MPReal(Float::with_val(self.0.prec(), self.0.sqrt_ref())))
    }

    pub fn total_cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Debug for MPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[P={}]", self, self.0.prec())
    }
}

impl fmt::Display for MPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.context().roundtrip_digits();
        f.write_str(&super::to_decimal(self, digits))
    }
}

impl PartialEq<f64> for MPReal {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for MPReal {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl<'a> AddAssign<&'a MPReal> for MPReal {
    #[inline]
    fn add_assign(&mut self, rhs: &'a MPReal) {
        debug_assert_eq!(self.0.prec(), rhs.0.prec());
        self.0 += &rhs.0;
    }
}

impl<'a> SubAssign<&'a MPReal> for MPReal {
    #[inline]
    fn sub_assign(&mut self, rhs: &'a MPReal) {
        debug_assert_eq!(self.0.prec(), rhs.0.prec());
        self.0 -= &rhs.0;
    }
}

impl<'a> MulAssign<&'a MPReal> for MPReal {
    #[inline]
    fn mul_assign(&mut self, rhs: &'a MPReal) {
        debug_assert_eq!(self.0.prec(), rhs.0.prec());
        self.0 *= &rhs.0;
    }
}

impl<'a> DivAssign<&'a MPReal> for MPReal {
    #[inline]
    fn div_assign(&mut self, rhs: &'a MPReal) {
        debug_assert_eq!(self.0.prec(), rhs.0.prec());
        self.0 /= &rhs.0;
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl<'a> $tr<&'a MPReal> for &'a MPReal {
            type Output = MPReal;
            fn $method(self, rhs: &'a MPReal) -> MPReal {
                let mut r = self.clone();
                r.$assign(rhs);
                r
            }
        }
    };
}

binop!(Add, add, add_assign);
binop!(Sub, sub, sub_assign);
binop!(Mul, mul, mul_assign);
binop!(Div, div, div_assign);

impl Neg for MPReal {
    type Output = MPReal;
    fn neg(self) -> MPReal {
        MPReal(-self.0)
    }
}

impl Real for MPReal {
    #[inline]
    fn context(&self) -> PrecisionContext {
        MPReal::context(self)
    }

    fn zero(ctx: PrecisionContext) -> Self {
        MPReal::zero(ctx)
    }

    fn from_i64(v: i64, ctx: PrecisionContext) -> Self {
        MPReal::from_i64(v, ctx)
    }

    fn from_f64(v: f64, ctx: PrecisionContext) -> Self {
        MPReal::from_f64(v, ctx)
    }

    fn from_rational(q: &Rational, ctx: PrecisionContext) -> Self {
        MPReal::from_rational(q, ctx)
    }

    fn from_mp(x: &MPReal, ctx: PrecisionContext) -> Self {
        x.widen(ctx)
    }

    fn to_mp(&self) -> MPReal {
        self.clone()
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    #[inline]
    fn set_mul(&mut self, a: &Self, b: &Self) {
        self.0.assign(&a.0 * &b.0);
    }

    #[inline]
    fn set_zero(&mut self) {
        self.0.assign(0);
    }

    #[inline]
    fn neg_assign(&mut self) {
        self.0.neg_assign();
    }

    fn sqrt(&self) -> Self {
        MPReal(Float::with_val(self.0.prec(), self.0.sqrt_ref()))
    }

    fn abs(&self) -> Self {
        MPReal(Float::with_val(self.0.prec(), self.0.abs_ref()))
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }
}
