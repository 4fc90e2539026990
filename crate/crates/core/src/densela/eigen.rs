use serde::Serialize;

use crate::precision::{MPComplex, PrecisionContext, Real};

use super::hessenberg::check_pencil;
use super::{hessenberg_triangular, qz_iterate, LinalgError, MPMatrix, Matrix, QZConfig};

/// Finite eigenvalues sorted by `(re, im)` plus the count of infinite ones.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    #[serde(skip)]
    pub finite: Vec<MPComplex>,
    pub infinite_count: usize,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.finite.len() + self.infinite_count
    }
}

/// Eigenvalues `c` of `A·x = c·B·x`. Pairs with `|β| <= ε_P·‖B‖_F` are
/// counted as infinite.
pub fn eigenvalues(a: MPMatrix, b: MPMatrix, cfg: &QZConfig) -> Result<Spectrum, LinalgError> {
    cfg.validate()?;
    check_pencil(&a, &b)?;
    if a.context() == PrecisionContext::DOUBLE && cfg.allow_native_double {
        let (a, b) = (a.to_native(), b.to_native());
        solve(a, b, cfg)
    } else {
        solve(a, b, cfg)
    }
}

/// Standard eigenvalue problem, i.e. `B = Id`.
pub fn eigenvalues_standard(a: MPMatrix, cfg: &QZConfig) -> Result<Spectrum, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare(a.rows(), a.cols()));
    }
    let b = MPMatrix::identity(a.rows(), a.context());
    eigenvalues(a, b, cfg)
}

fn solve<R: Real>(a: Matrix<R>, b: Matrix<R>, cfg: &QZConfig) -> Result<Spectrum, LinalgError> {
    let ctx = a.context();
    let threshold = R::epsilon(ctx).times(&b.frobenius_norm());
    let (h, t) = hessenberg_triangular(a, b)?;
    let res = qz_iterate(h, t, cfg)?;
    if !res.converged {
        return Err(LinalgError::NotConverged {
            sweeps: res.total_sweeps,
        });
    }
    let mut finite = Vec::with_capacity(res.pairs.len());
    let mut infinite_count = 0;
    for p in &res.pairs {
        if p.beta.abs() > threshold {
            finite.push(p.alpha.over(&p.beta).to_mp());
        } else {
            infinite_count += 1;
        }
    }
    finite.sort_by(|x, y| x.lex_cmp(y));
    Ok(Spectrum {
        finite,
        infinite_count,
        sweeps: res.total_sweeps,
    })
}

/// Runs the generic solver without the native fast path; used to check
/// that both backends agree bit for bit.
#[doc(hidden)]
pub fn eigenvalues_mpfr_only(a: MPMatrix, b: MPMatrix, cfg: &QZConfig) -> Result<Spectrum, LinalgError> {
    cfg.validate()?;
    check_pencil(&a, &b)?;
    solve(a, b, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::MPReal;

    #[test]
    fn diagonal_spectrum_is_sorted() {
        let ctx = PrecisionContext::new(90).unwrap();
        let a = MPMatrix::from_i64_rows(&[vec![3, 0, 0], vec![0, 1, 0], vec![0, 0, 2]], ctx);
        let s = eigenvalues_standard(a, &QZConfig::default()).unwrap();
        let re: Vec<MPReal> = s.finite.iter().map(|z| z.re.clone()).collect();
        assert_eq!(re, [1, 2, 3].map(|v| MPReal::from_i64(v, ctx)));
        assert_eq!(s.infinite_count, 0);
    }

    #[test]
    fn zero_matrix_has_zero_spectrum() {
        let ctx = PrecisionContext::DOUBLE;
        let s = eigenvalues_standard(MPMatrix::zeros(4, 4, ctx), &QZConfig::default()).unwrap();
        assert_eq!(s.finite.len(), 4);
        assert!(s.finite.iter().all(|z| z.is_zero()));
    }

    #[test]
    fn counts_sum_to_order() {
        let ctx = PrecisionContext::new(80).unwrap();
        let a = MPMatrix::from_i64_rows(&[vec![1, 2, 0], vec![3, 1, 1], vec![0, 1, 4]], ctx);
        let b = MPMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 0, 0]], ctx);
        let s = eigenvalues(a, b, &QZConfig::default()).unwrap();
        assert_eq!(s.order(), 3);
        assert!(s.infinite_count >= 1);
    }
}
