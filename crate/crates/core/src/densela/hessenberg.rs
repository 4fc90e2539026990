use crate::precision::{Complex, Real};

use super::givens::{rotate_cols, rotate_rows, Rotation, Scratch};
use super::{LinalgError, Matrix};

pub(crate) fn check_pencil<R: Real>(a: &Matrix<R>, b: &Matrix<R>) -> Result<(), LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare(a.rows(), a.cols()));
    }
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(LinalgError::DimensionMismatch {
            left: (a.rows(), a.cols()),
            right: (b.rows(), b.cols()),
        });
    }
    a.context().check_same(b.context())?;
    Ok(())
}

/// Reduces `(A, B)` to `(H, T) = (Q·A·Z, Q·B·Z)` with `H` upper Hessenberg
/// and `T` upper triangular. `Q` and `Z` are not accumulated.
pub fn hessenberg_triangular<R: Real>(
    mut a: Matrix<R>,
    mut b: Matrix<R>,
) -> Result<(Matrix<R>, Matrix<R>), LinalgError> {
    check_pencil(&a, &b)?;
    let n = a.rows();
    if n <= 1 {
        return Ok((a, b));
    }
    triangularize(&mut a, &mut b);
    let mut scratch = Scratch::new(a.context());
    for jcol in 0..n - 2 {
        for jrow in (jcol + 2..n).rev() {
            if a[(jrow, jcol)].is_zero() {
                continue;
            }
            let (rot, r) = Rotation::zeroing(&a[(jrow - 1, jcol)], &a[(jrow, jcol)]);
            a[(jrow - 1, jcol)] = r;
            a[(jrow, jcol)].set_zero();
            rotate_rows(&mut a, jrow - 1, jrow, jcol + 1..=n - 1, &rot, &mut scratch);
            rotate_rows(&mut b, jrow - 1, jrow, jrow - 1..=n - 1, &rot, &mut scratch);

            let (rot, r) = Rotation::zeroing(&b[(jrow, jrow)], &b[(jrow, jrow - 1)]);
            b[(jrow, jrow)] = r;
            b[(jrow, jrow - 1)].set_zero();
            rotate_cols(&mut b, jrow, jrow - 1, 0..=jrow - 1, &rot, &mut scratch);
            rotate_cols(&mut a, jrow, jrow - 1, 0..=n - 1, &rot, &mut scratch);
        }
    }
    for i in 0..n {
        for j in 0..i {
            b[(i, j)].set_zero();
            if j + 1 < i {
                a[(i, j)].set_zero();
            }
        }
    }
    Ok((a, b))
}

/// Householder QR of `B`, applied to `A` from the left as well. Columns that
/// are already zero below the diagonal are left alone.
fn triangularize<R: Real>(a: &mut Matrix<R>, b: &mut Matrix<R>) {
    let n = b.rows();
    let ctx = b.context();
    let mut t = R::zero(ctx);
    for k in 0..n - 1 {
        if (k + 1..n).all(|i| b[(i, k)].is_zero()) {
            continue;
        }
        let alpha = b[(k, k)].clone();
        let mut norm2 = R::zero(ctx);
        for i in k..n {
            let z = &b[(i, k)];
            t.set_mul(&z.re, &z.re);
            norm2 += &t;
            t.set_mul(&z.im, &z.im);
            norm2 += &t;
        }
        let mut beta = norm2.sqrt();
        if !alpha.re.is_sign_negative() {
            beta.neg_assign();
        }
        // Reflector I - tau·v·v^H with v[0] = 1 maps column k to beta·e_1.
        let tau = Complex::new(beta.minus(&alpha.re), alpha.im.negated()).unscale(&beta);
        let denom = Complex::new(alpha.re.minus(&beta), alpha.im.clone());
        let mut v = Vec::with_capacity(n - k);
        v.push(Complex::from_i64(1, 0, ctx));
        for i in k + 1..n {
            v.push(b[(i, k)].over(&denom));
        }
        let ctau = tau.conj();
        apply_reflector(b, k, k + 1, &v, &ctau);
        apply_reflector(a, k, 0, &v, &ctau);
        b[(k, k)] = Complex::from_real(beta);
        for i in k + 1..n {
            b[(i, k)].set_zero();
        }
    }
}

/// `M[k.., c0..] -= ctau · v · (v^H · M[k.., c0..])`.
fn apply_reflector<R: Real>(m: &mut Matrix<R>, k: usize, c0: usize, v: &[Complex<R>], ctau: &Complex<R>) {
    let cols = m.cols();
    if c0 >= cols {
        return;
    }
    let ctx = m.context();
    let mut w = vec![Complex::<R>::zero(ctx); cols - c0];
    for (vi, row) in v.iter().zip(k..) {
        let cv = vi.conj();
        for (wj, x) in w.iter_mut().zip(&m.row(row)[c0..]) {
            if x.is_zero() {
                continue;
            }
            let p = cv.times(x);
            wj.re += &p.re;
            wj.im += &p.im;
        }
    }
    for wj in &mut w {
        *wj = ctau.times(wj);
    }
    for (vi, row) in v.iter().zip(k..) {
        for (x, wj) in m.row_mut(row)[c0..].iter_mut().zip(&w) {
            let p = wj.times(vi);
            x.re -= &p.re;
            x.im -= &p.im;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densela::MPMatrix;
    use crate::precision::{MPComplex, PrecisionContext};

    fn is_hessenberg_triangular(h: &MPMatrix, t: &MPMatrix) -> bool {
        let n = h.rows();
        (0..n).all(|i| (0..i).all(|j| t[(i, j)].is_zero() && (j + 1 >= i || h[(i, j)].is_zero())))
    }

    #[test]
    fn trivial_sizes_pass_through() {
        let ctx = PrecisionContext::new(64).unwrap();
        let a = MPMatrix::from_i64_rows(&[vec![7]], ctx);
        let b = MPMatrix::from_i64_rows(&[vec![2]], ctx);
        let (h, t) = hessenberg_triangular(a.clone(), b.clone()).unwrap();
        assert_eq!((h, t), (a, b));
    }

    #[test]
    fn already_reduced_input_is_untouched() {
        let ctx = PrecisionContext::new(64).unwrap();
        let a = MPMatrix::from_i64_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![0, 7, 8]], ctx);
        let b = MPMatrix::identity(3, ctx);
        let (h, t) = hessenberg_triangular(a.clone(), b.clone()).unwrap();
        assert_eq!(h, a);
        assert_eq!(t, b);
    }

    #[test]
    fn dense_pencil_gets_reduced() {
        let ctx = PrecisionContext::new(100).unwrap();
        let a = MPMatrix::from_fn(5, 5, ctx, |i, j| MPComplex::from_i64((i * 3 + j) as i64 % 7 - 3, (i + j) as i64 % 3, ctx));
        let b = MPMatrix::from_fn(5, 5, ctx, |i, j| MPComplex::from_i64((i * j) as i64 % 5 - 1 + (i == j) as i64 * 6, 0, ctx));
        let fa = a.frobenius_norm();
        let fb = b.frobenius_norm();
        let (h, t) = hessenberg_triangular(a, b).unwrap();
        assert!(is_hessenberg_triangular(&h, &t));
        // unitary transformations preserve the Frobenius norm
        let tol = ctx.epsilon().times(&crate::precision::MPReal::from_i64(1000, ctx));
        assert!(h.frobenius_norm().minus(&fa).abs() <= tol.times(&fa));
        assert!(t.frobenius_norm().minus(&fb).abs() <= tol.times(&fb));
    }

    #[test]
    fn shape_errors() {
        let ctx = PrecisionContext::new(64).unwrap();
        let a = MPMatrix::zeros(2, 3, ctx);
        assert!(matches!(
            hessenberg_triangular(a.clone(), a),
            Err(LinalgError::NotSquare(2, 3))
        ));
        let a = MPMatrix::zeros(2, 2, ctx);
        let b = MPMatrix::zeros(3, 3, ctx);
        assert!(matches!(
            hessenberg_triangular(a, b),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }
}
