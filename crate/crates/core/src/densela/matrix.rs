use std::fmt::Write as _;

use crate::precision::{to_decimal, Complex, MPReal, PrecisionContext, Real};

use super::LinalgError;

/// Dense complex matrix stored row-major; all entries share one context.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    ctx: PrecisionContext,
    data: Vec<Complex<R>>,
}

/// Dense complex matrix over [`MPReal`].
pub type MPMatrix = Matrix<MPReal>;

impl<R: Real> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize, ctx: PrecisionContext) -> Self {
        Matrix {
            rows,
            cols,
            ctx,
            data: vec![Complex::zero(ctx); rows * cols],
        }
    }

    pub fn identity(n: usize, ctx: PrecisionContext) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m[(i, i)] = Complex::from_i64(1, 0, ctx);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        ctx: PrecisionContext,
        mut f: impl FnMut(usize, usize) -> Complex<R>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let z = f(i, j);
                debug_assert_eq!(z.context(), ctx);
                data.push(z);
            }
        }
        Matrix { rows, cols, ctx, data }
    }

    /// Builds a matrix from row-major entries, validating count and contexts.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        ctx: PrecisionContext,
        data: Vec<Complex<R>>,
    ) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                rows,
                cols,
                len: data.len(),
            });
        }
        for z in &data {
            ctx.check_same(z.re.context())?;
            ctx.check_same(z.im.context())?;
        }
        Ok(Matrix { rows, cols, ctx, data })
    }

    /// Real integer matrix, e.g. for hand-written test pencils.
    pub fn from_i64_rows(rows: &[Vec<i64>], ctx: PrecisionContext) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_fn(r, c, ctx, |i, j| Complex::from_i64(rows[i][j], 0, ctx))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn context(&self) -> PrecisionContext {
        self.ctx
    }

    pub fn entries(&self) -> &[Complex<R>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<R>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Complex<R>] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Two distinct rows, mutably.
    pub(crate) fn row_pair_mut(
        &mut self,
        i: usize,
        j: usize,
    ) -> (&mut [Complex<R>], &mut [Complex<R>]) {
        debug_assert_ne!(i, j);
        let c = self.cols;
        if i < j {
            let (lo, hi) = self.data.split_at_mut(j * c);
            (&mut lo[i * c..(i + 1) * c], &mut hi[..c])
        } else {
            let (lo, hi) = self.data.split_at_mut(i * c);
            (&mut hi[..c], &mut lo[j * c..(j + 1) * c])
        }
    }

    pub fn frobenius_norm(&self) -> R {
        let mut acc = R::zero(self.ctx);
        let mut t = R::zero(self.ctx);
        for z in &self.data {
            t.set_mul(&z.re, &z.re);
            acc += &t;
            t.set_mul(&z.im, &z.im);
            acc += &t;
        }
        acc.sqrt()
    }

    pub fn map<S: Real>(&self, ctx: PrecisionContext, f: impl Fn(&Complex<R>) -> Complex<S>) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_mp(&self) -> MPMatrix {
        self.map(self.ctx, Complex::to_mp)
    }

    /// True when every entry's imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.ctx, |i, j| self[(j, i)].clone())
    }

    /// Plain matrix product (entries accumulated left to right).
    pub fn matmul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        self.ctx.check_same(rhs.ctx)?;
        let mut out = Self::zeros(self.rows, rhs.cols, self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let p = a.times(&rhs[(k, j)]);
                    let dst = &mut out.data[i * rhs.cols + j];
                    dst.re += &p.re;
                    dst.im += &p.im;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.ctx, |i, j| self[(j, i)].conj())
    }

    /// Decimal CSV dump, one matrix row per line, entries as `re;im`.
    pub fn to_csv(&self) -> String {
        let digits = self.ctx.roundtrip_digits();
        let mut out = String::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    out.push(',');
                }
                let z = &self[(i, j)];
                let _ = write!(
                    out,
                    "{};{}",
                    to_decimal(&z.re.to_mp(), digits),
                    to_decimal(&z.im.to_mp(), digits)
                );
            }
            out.push('\n');
        }
        out
    }
}

impl MPMatrix {
    /// Exact copy into native doubles; only valid at `P = 53`.
    pub(crate) fn to_native(&self) -> Matrix<f64> {
        debug_assert_eq!(self.ctx, PrecisionContext::DOUBLE);
        self.map(PrecisionContext::DOUBLE, |z| Complex::from_mp(z, PrecisionContext::DOUBLE))
    }

    /// Rounds every entry to `ctx` (exact when widening).
    pub fn with_precision(&self, ctx: PrecisionContext) -> MPMatrix {
        self.map(ctx, |z| z.widen(ctx))
    }
}

impl<R> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = Complex<R>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<R> {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<R> {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        let ctx = PrecisionContext::new(64).unwrap();
        let bad = MPMatrix::from_entries(2, 2, ctx, vec![Complex::zero(ctx); 3]);
        assert!(matches!(bad, Err(LinalgError::EntryCount { len: 3, .. })));
        let other = PrecisionContext::new(65).unwrap();
        let bad = MPMatrix::from_entries(1, 1, ctx, vec![Complex::zero(other)]);
        assert!(matches!(bad, Err(LinalgError::Precision(_))));
    }

    #[test]
    fn norm_and_product() {
        let ctx = PrecisionContext::new(80).unwrap();
        let a = MPMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]], ctx);
        assert_eq!(a.frobenius_norm(), MPReal::from_i64(5, ctx));
        let id = MPMatrix::identity(2, ctx);
        assert_eq!(a.matmul(&id).unwrap(), a);
        assert!(a.matmul(&MPMatrix::zeros(3, 1, ctx)).is_err());
    }

    #[test]
    fn csv_dump_shape() {
        let ctx = PrecisionContext::DOUBLE;
        let a = MPMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]], ctx);
        let csv = a.to_csv();
        assert_eq!(csv.lines().count(), 2);
        let first = csv.lines().next().unwrap().split(',').next().unwrap();
        let (re, im) = first.split_once(';').unwrap();
        assert_eq!(crate::precision::from_decimal(re, ctx).unwrap(), 1.0);
        assert_eq!(im, "0.0e0");
    }
}
