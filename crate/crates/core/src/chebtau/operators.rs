//! Coefficient-space operators on Chebyshev series `Σ φ_p T_p`.
//!
//! Row `i` of every operator is the `T_i` coefficient of the image, so an
//! `r×c` matrix maps the first `c` coefficients to the first `r`. Entries are
//! exact rationals.

use rug::{Integer, Rational};

/// Exact dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    /// `self · v`, using the first `cols` entries of `v` (missing ones are 0).
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::new();
                for (j, x) in v.iter().enumerate().take(self.cols) {
                    let m = self.get(i, j);
                    if *m != 0 && *x != 0 {
                        acc += Rational::from(m * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn max_abs(&self) -> Rational {
        self.data.iter().map(|q| q.clone().abs()).max().unwrap_or_default()
    }
}

fn b(i: usize) -> u32 {
    if i == 0 {
        2
    } else {
        1
    }
}

/// Second-derivative symbol for `p >= i+2`, `p+i` even; zero otherwise.
pub fn d2_entry(i: usize, p: usize) -> Rational {
    if p < i + 2 || (p + i) % 2 == 1 {
        return Rational::new();
    }
    let bi = b(i);
    let (i, p) = (Integer::from(i), Integer::from(p));
    let num = Integer::from(&p * &p) - Integer::from(&i * &i);
    Rational::from((p * num, bi))
}

/// Fourth-derivative symbol for `p >= i+4`, `p+i` even; zero otherwise.
pub fn d4_entry(i: usize, p: usize) -> Rational {
    if p < i + 4 || (p + i) % 2 == 1 {
        return Rational::new();
    }
    let bi = b(i);
    let (i, p) = (Integer::from(i), Integer::from(p));
    let i2 = Integer::from(&i * &i);
    let p2 = Integer::from(&p * &p);
    let p4 = Integer::from(&p2 * &p2);
    let i4 = Integer::from(&i2 * &i2);
    let p2m4 = Integer::from(&p2 - 4u32);
    let i2m4 = Integer::from(&i2 - 4u32);
    let mut inner = Integer::from(&p2 * &p2m4) * &p2m4;
    inner -= Integer::from(&p4 * &i2) * 3u32;
    inner += Integer::from(&p2 * &i4) * 3u32;
    inner -= Integer::from(&i2 * &i2m4) * &i2m4;
    Rational::from((p * inner, Integer::from(24u32 * bi)))
}

/// `T_i` coefficient of `z·T_k`.
pub fn mult_z_entry(i: usize, k: usize) -> Rational {
    let mut q = Rational::new();
    if i == k + 1 {
        q += Rational::from((1, 2));
    }
    if i == k.abs_diff(1) {
        q += Rational::from((1, 2));
    }
    q
}

/// `T_i` coefficient of `z²·T_k`.
pub fn mult_z2_entry(i: usize, k: usize) -> Rational {
    let mut q = Rational::new();
    if i == k {
        q += Rational::from((1, 2));
    }
    if i == k + 2 {
        q += Rational::from((1, 4));
    }
    if i == k.abs_diff(2) {
        q += Rational::from((1, 4));
    }
    q
}

/// `D²` as an `(N+1)×(N+3)` matrix.
pub fn d2_matrix(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 3, d2_entry)
}

/// `D⁴` as an `(N+1)×(N+5)` matrix.
pub fn d4_matrix(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 5, d4_entry)
}

/// Multiplication by `z` as an `(N+1)×(N+3)` matrix.
pub fn mult_z(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 3, mult_z_entry)
}

/// Multiplication by `z²` as an `(N+1)×(N+3)` matrix.
pub fn mult_z2(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 3, mult_z2_entry)
}

/// Boundary rows `(even, odd)` over `ncols` coefficients.
///
/// Plain rows encode `φ(1) ± φ(−1) = 0`; with `derivative_scaled` the
/// weights are `i²` and encode the same for `φ′`.
pub fn bc_rows(ncols: usize, derivative_scaled: bool) -> (Vec<Rational>, Vec<Rational>) {
    let weight = |i: usize| {
        if derivative_scaled {
            Rational::from(Integer::from(i) * Integer::from(i))
        } else {
            Rational::from(1)
        }
    };
    let select = |parity: usize| {
        (0..ncols)
            .map(|i| if i % 2 == parity { weight(i) } else { Rational::new() })
            .collect()
    };
    (select(0), select(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn leading_d2_entries() {
        assert_eq!(d2_entry(0, 2), 4);
        assert_eq!(d2_entry(1, 3), 24);
        assert_eq!(d2_entry(2, 4), 48);
        assert_eq!(d2_entry(0, 4), 32);
        assert_eq!(d2_entry(0, 6), 108);
        assert_eq!(d2_entry(1, 5), 120);
        assert_eq!(d2_entry(0, 3), 0);
        assert_eq!(d2_entry(3, 3), 0);
    }

    #[test]
    fn leading_d4_entries() {
        assert_eq!(d4_entry(0, 4), 192);
        assert_eq!(d4_entry(0, 5), 0);
        assert_eq!(d4_entry(2, 4), 0);
    }

    #[test]
    fn last_d2_row_has_one_term() {
        let n = 6;
        let m = d2_matrix(n);
        let nonzero: Vec<usize> = (0..m.cols()).filter(|&p| *m.get(n, p) != 0).collect();
        assert_eq!(nonzero, vec![n + 2]);
    }

    #[test]
    fn multiplication_operators() {
        // 1-based (2,1) = 1, (2,3) = 1/2, (1,2) = 1/2
        assert_eq!(mult_z_entry(1, 0), 1);
        assert_eq!(mult_z_entry(1, 2), Rational::from((1, 2)));
        assert_eq!(mult_z_entry(0, 1), Rational::from((1, 2)));
        assert_eq!(mult_z_entry(0, 0), 0);
        // 1-based (1,1) = 1/2, (1,3) = 1/4, (2,2) = 3/4, (2,4) = 1/4, (3,1) = (3,3) = 1/2, (3,5) = 1/4
        assert_eq!(mult_z2_entry(0, 0), Rational::from((1, 2)));
        assert_eq!(mult_z2_entry(0, 2), Rational::from((1, 4)));
        assert_eq!(mult_z2_entry(1, 1), Rational::from((3, 4)));
        assert_eq!(mult_z2_entry(1, 3), Rational::from((1, 4)));
        assert_eq!(mult_z2_entry(2, 0), Rational::from((1, 2)));
        assert_eq!(mult_z2_entry(2, 2), Rational::from((1, 2)));
        assert_eq!(mult_z2_entry(2, 4), Rational::from((1, 4)));
        assert_eq!(mult_z2_entry(5, 3), Rational::from((1, 4)));
        assert_eq!(mult_z2_entry(5, 7), Rational::from((1, 4)));
        // z·1 = z
        assert_eq!(mult_z(4).apply(&[q(1)]), vec![q(0), q(1), q(0), q(0), q(0)]);
    }

    #[test]
    fn boundary_row_shapes() {
        let (even, _) = bc_rows(4, false);
        assert_eq!(even, vec![q(1), q(0), q(1), q(0)]);
        let (_, odd) = bc_rows(4, true);
        assert_eq!(odd, vec![q(0), q(1), q(0), q(9)]);
    }
}
