use std::fmt;

use super::{MPReal, PrecisionContext, PrecisionError, Real};

/// Complex number whose parts share one precision context.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex<R> {
    pub re: R,
    pub im: R,
}

/// Arbitrary-precision complex scalar.
pub type MPComplex = Complex<MPReal>;

impl<R: Real> Complex<R> {
    pub fn new(re: R, im: R) -> Self {
        debug_assert_eq!(re.context(), im.context());
        Complex { re, im }
    }

    pub fn try_new(re: R, im: R) -> Result<Self, PrecisionError> {
        re.context().check_same(im.context())?;
        Ok(Complex { re, im })
    }

    pub fn zero(ctx: PrecisionContext) -> Self {
        Complex {
            re: R::zero(ctx),
            im: R::zero(ctx),
        }
    }

    pub fn from_real(re: R) -> Self {
        let im = R::zero(re.context());
        Complex { re, im }
    }

    pub fn from_i64(re: i64, im: i64, ctx: PrecisionContext) -> Self {
        Complex {
            re: R::from_i64(re, ctx),
            im: R::from_i64(im, ctx),
        }
    }

    pub fn from_f64(re: f64, im: f64, ctx: PrecisionContext) -> Self {
        Complex {
            re: R::from_f64(re, ctx),
            im: R::from_f64(im, ctx),
        }
    }

    pub fn context(&self) -> PrecisionContext {
        self.re.context()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn set_zero(&mut self) {
        self.re.set_zero();
        self.im.set_zero();
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: self.im.negated(),
        }
    }

    pub fn negated(&self) -> Self {
        Complex {
            re: self.re.negated(),
            im: self.im.negated(),
        }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        Complex {
            re: self.re.plus(&rhs.re),
            im: self.im.plus(&rhs.im),
        }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        Complex {
            re: self.re.minus(&rhs.re),
            im: self.im.minus(&rhs.im),
        }
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut re = self.re.times(&rhs.re);
        re -= &self.im.times(&rhs.im);
        let mut im = self.re.times(&rhs.im);
        im += &self.im.times(&rhs.re);
        Complex { re, im }
    }

    pub fn scale(&self, k: &R) -> Self {
        Complex {
            re: self.re.times(k),
            im: self.im.times(k),
        }
    }

    pub fn unscale(&self, k: &R) -> Self {
        Complex {
            re: self.re.over(k),
            im: self.im.over(k),
        }
    }

    /// `|re| + |im|`, a cheap norm equivalent to the modulus within √2.
    pub fn abs1(&self) -> R {
        self.re.abs().plus(&self.im.abs())
    }

    /// Modulus via the scaled hypotenuse `m·sqrt(1 + (n/m)²)`, `m >= n`.
    pub fn abs(&self) -> R {
        let a = self.re.abs();
        let b = self.im.abs();
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if small.is_zero() {
            return big;
        }
        let mut ratio = small.over(&big);
        let r2 = ratio.clone();
        ratio *= &r2;
        ratio += &R::one(big.context());
        big.times(&ratio.sqrt())
    }

    /// Smith's scaling-safe complex division. Division by exact zero yields
    /// non-finite parts; use [`Complex::try_over`] for a checked variant.
    pub fn over(&self, d: &Self) -> Self {
        let (a, b) = (&self.re, &self.im);
        if d.im.is_zero() {
            return Complex {
                re: a.over(&d.re),
                im: b.over(&d.re),
            };
        }
        if d.re.abs() >= d.im.abs() {
            let r = d.im.over(&d.re);
            let den = d.re.plus(&d.im.times(&r));
            let re = a.plus(&b.times(&r)).over(&den);
            let im = b.minus(&a.times(&r)).over(&den);
            Complex { re, im }
        } else {
            let r = d.re.over(&d.im);
            let den = d.im.plus(&d.re.times(&r));
            let re = a.times(&r).plus(b).over(&den);
            let im = b.times(&r).minus(a).over(&den);
            Complex { re, im }
        }
    }

    pub fn try_over(&self, d: &Self) -> Result<Self, PrecisionError> {
        self.context().check_same(d.context())?;
        if d.is_zero() {
            return Err(PrecisionError::DivisionByZero);
        }
        Ok(self.over(d))
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let ctx = self.context();
        if self.is_zero() {
            return Complex::zero(ctx);
        }
        let r = self.abs();
        let two = R::from_i64(2, ctx);
        if !self.re.is_sign_negative() {
            let t = r.plus(&self.re).over(&two).sqrt();
            let im = self.im.over(&t.times(&two));
            Complex { re: t, im }
        } else {
            let mut t = r.minus(&self.re).over(&two).sqrt();
            let re = self.im.abs().over(&t.times(&two));
            if self.im.is_sign_negative() {
                t.neg_assign();
            }
            Complex { re, im: t }
        }
    }

    pub fn to_mp(&self) -> MPComplex {
        Complex {
            re: self.re.to_mp(),
            im: self.im.to_mp(),
        }
    }

    pub fn from_mp(z: &MPComplex, ctx: PrecisionContext) -> Self {
        Complex {
            re: R::from_mp(&z.re, ctx),
            im: R::from_mp(&z.im, ctx),
        }
    }
}

impl MPComplex {
    pub fn widen(&self, ctx: PrecisionContext) -> Self {
        Complex {
            re: self.re.widen(ctx),
            im: self.im.widen(ctx),
        }
    }

    /// Lexicographic order on (real, imaginary).
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.re
            .total_cmp(&other.re)
            .then_with(|| self.im.total_cmp(&other.im))
    }
}

impl<R: Real + fmt::Display> fmt::Display for Complex<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}-{}i", self.re, self.im.negated())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
