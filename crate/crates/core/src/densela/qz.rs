//! Single-shift complex QZ iteration on a Hessenberg–triangular pencil.
//!
//! Only eigenvalues are computed, so every transformation is restricted to
//! the active window `ifrstm..=ilastm`. The control flow follows the
//! classical LAPACK `zhgeqz` driver: per pass, either a 1×1 block deflates
//! at the bottom, a negligible `T(j,j)` is chased out, or one implicit
//! shifted sweep runs over the unreduced block `ifirst..=ilast`.

use crate::precision::{Complex, Real};

use super::givens::{rotate_cols, rotate_rows, Rotation, Scratch};
use super::hessenberg::check_pencil;
use super::{GeneralizedEigenPair, LinalgError, Matrix, QZConfig, QZResult};

enum Step {
    /// `H(ilast, ilast-1)` is zero: record the bottom pair.
    Record,
    /// `T(ilast, ilast)` is zero: rotate `H(ilast, ilast-1)` away first.
    ClearInfinite,
    /// Run a shifted sweep over `ifirst..=ilast`.
    Sweep(usize),
}

struct Tolerances<R> {
    /// `deflation_factor · ε_P`.
    ulp: R,
    /// `ulp · ‖H‖_F`.
    atol: R,
    /// `ε_P · ‖T‖_F`.
    btol: R,
}

impl<R: Real> Tolerances<R> {
    fn negligible_subdiagonal(&self, h: &Matrix<R>, j: usize) -> bool {
        let mut scale = h[(j, j)].abs();
        scale += &h[(j - 1, j - 1)].abs();
        let bound = if scale.is_zero() {
            self.atol.clone()
        } else {
            self.ulp.times(&scale)
        };
        h[(j, j - 1)].abs() <= bound
    }

    fn negligible_diagonal(&self, t: &Matrix<R>, j: usize) -> bool {
        t[(j, j)].abs() <= self.btol
    }
}

fn is_hessenberg_triangular<R: Real>(h: &Matrix<R>, t: &Matrix<R>) -> bool {
    let n = h.rows();
    (0..n).all(|i| (0..i).all(|j| t[(i, j)].is_zero() && (j + 1 >= i || h[(i, j)].is_zero())))
}

/// Runs QZ on `(H, T)` until every eigenvalue has deflated or the budget of
/// `max_sweeps_per_eigenvalue · n` passes is spent.
pub fn qz_iterate<R: Real>(
    mut h: Matrix<R>,
    mut t: Matrix<R>,
    cfg: &QZConfig,
) -> Result<QZResult<R>, LinalgError> {
    cfg.validate()?;
    check_pencil(&h, &t)?;
    if !is_hessenberg_triangular(&h, &t) {
        return Err(LinalgError::NotHessenbergTriangular);
    }
    let n = h.rows();
    let ctx = h.context();
    if n == 0 {
        return Ok(QZResult {
            pairs: Vec::new(),
            total_sweeps: 0,
            converged: true,
        });
    }

    let eps = R::epsilon(ctx);
    let ulp = eps.times(&R::from_f64(cfg.deflation_factor, ctx));
    let tol = Tolerances {
        atol: ulp.times(&h.frobenius_norm()),
        btol: eps.times(&t.frobenius_norm()),
        ulp,
    };

    let mut pairs: Vec<Option<GeneralizedEigenPair<R>>> = vec![None; n];
    let mut scratch = Scratch::new(ctx);
    let mut ilast = n - 1;
    let mut ifrstm = 0;
    let mut ilastm = n - 1;
    let mut iiter = 0usize;
    let mut eshift = Complex::<R>::zero(ctx);
    let mut sweeps = 0usize;
    let maxit = cfg.max_sweeps_per_eigenvalue.saturating_mul(n);

    for _ in 0..maxit {
        let step = find_step(&mut h, &mut t, &tol, ilast, ifrstm, ilastm, &mut scratch)?;
        let ifirst = match step {
            Step::Sweep(ifirst) => ifirst,
            Step::ClearInfinite | Step::Record => {
                if let Step::ClearInfinite = step {
                    let (rot, r) = Rotation::zeroing(&h[(ilast, ilast)], &h[(ilast, ilast - 1)]);
                    h[(ilast, ilast)] = r;
                    h[(ilast, ilast - 1)].set_zero();
                    rotate_cols(&mut h, ilast, ilast - 1, ifrstm..=ilast - 1, &rot, &mut scratch);
                    rotate_cols(&mut t, ilast, ilast - 1, ifrstm..=ilast - 1, &rot, &mut scratch);
                }
                pairs[ilast] = Some(record_pair(&mut h, &mut t, ilast)?);
                if ilast == 0 {
                    return Ok(QZResult {
                        pairs: pairs.into_iter().map(|p| p.expect("all deflated")).collect(),
                        total_sweeps: sweeps,
                        converged: true,
                    });
                }
                ilast -= 1;
                iiter = 0;
                eshift.set_zero();
                ilastm = ilast;
                if ifrstm > ilast {
                    ifrstm = 0;
                }
                continue;
            }
        };

        iiter += 1;
        sweeps += 1;
        ifrstm = ifirst;
        let shift = if !iiter.is_multiple_of(cfg.exceptional_shift_period) {
            wilkinson_shift(&h, &t, ilast)
        } else {
            let l = ilast;
            let bump = if iiter.is_multiple_of(2 * cfg.exceptional_shift_period) && !t[(l, l)].is_zero() {
                h[(l, l)].over(&t[(l, l)])
            } else {
                h[(l, l - 1)].over(&t[(l - 1, l - 1)])
            };
            eshift = eshift.plus(&bump);
            eshift.clone()
        };

        // Start lower if two consecutive subdiagonals are small enough.
        let mut istart = ifirst;
        let mut lead = h[(ifirst, ifirst)].minus(&shift.times(&t[(ifirst, ifirst)]));
        for j in (ifirst + 1..ilast).rev() {
            let d = h[(j, j)].minus(&shift.times(&t[(j, j)]));
            let lhs = h[(j, j - 1)].abs().times(&h[(j + 1, j)].abs());
            if lhs <= d.abs().times(&tol.atol) {
                istart = j;
                lead = d;
                break;
            }
        }

        let (mut rot, _) = Rotation::zeroing(&lead, &h[(istart + 1, istart)]);
        for j in istart..ilast {
            if j > istart {
                let (r2, r) = Rotation::zeroing(&h[(j, j - 1)], &h[(j + 1, j - 1)]);
                h[(j, j - 1)] = r;
                h[(j + 1, j - 1)].set_zero();
                rot = r2;
            }
            rotate_rows(&mut h, j, j + 1, j..=ilastm, &rot, &mut scratch);
            rotate_rows(&mut t, j, j + 1, j..=ilastm, &rot, &mut scratch);

            let (col, r) = Rotation::zeroing(&t[(j + 1, j + 1)], &t[(j + 1, j)]);
            t[(j + 1, j + 1)] = r;
            t[(j + 1, j)].set_zero();
            rotate_cols(&mut h, j + 1, j, ifrstm..=(j + 2).min(ilast), &col, &mut scratch);
            rotate_cols(&mut t, j + 1, j, ifrstm..=j, &col, &mut scratch);
        }
    }

    log::warn!("QZ: no convergence after {sweeps} sweeps (order {n})");
    Ok(QZResult {
        pairs: Vec::new(),
        total_sweeps: sweeps,
        converged: false,
    })
}

/// Makes `T(l,l)` real and non-negative, then reads off `(α, β)`.
fn record_pair<R: Real>(
    h: &mut Matrix<R>,
    t: &mut Matrix<R>,
    l: usize,
) -> Result<GeneralizedEigenPair<R>, LinalgError> {
    let absb = t[(l, l)].abs();
    if absb.is_zero() {
        t[(l, l)].set_zero();
    } else {
        let phase = t[(l, l)].conj().unscale(&absb);
        t[(l, l)] = Complex::from_real(absb);
        h[(l, l)] = h[(l, l)].times(&phase);
    }
    let pair = GeneralizedEigenPair {
        alpha: h[(l, l)].clone(),
        beta: t[(l, l)].clone(),
    };
    if pair.alpha.is_zero() && pair.beta.is_zero() {
        return Err(LinalgError::SingularPencil(l));
    }
    Ok(pair)
}

/// Eigenvalue of the trailing 2×2 block of `H·T⁻¹` nearer to its last
/// diagonal entry.
fn wilkinson_shift<R: Real>(h: &Matrix<R>, t: &Matrix<R>, l: usize) -> Complex<R> {
    let k = l - 1;
    let u12 = t[(k, l)].over(&t[(l, l)]);
    let ad11 = h[(k, k)].over(&t[(k, k)]);
    let ad21 = h[(l, k)].over(&t[(k, k)]);
    let ad12 = h[(k, l)].over(&t[(l, l)]);
    let ad22 = h[(l, l)].over(&t[(l, l)]);
    let abi22 = ad22.minus(&u12.times(&ad21));
    let abi12 = ad12.minus(&u12.times(&ad11));
    let prod = abi12.times(&ad21);
    if prod.is_zero() {
        return abi22;
    }
    let ctx = h.context();
    let x = ad11.minus(&abi22).unscale(&R::from_i64(2, ctx));
    let mut y = x.times(&x).plus(&prod).sqrt();
    let mut dot = x.re.times(&y.re);
    dot += &x.im.times(&y.im);
    if dot.is_sign_negative() && !dot.is_zero() {
        y = y.negated();
    }
    abi22.minus(&prod.over(&x.plus(&y)))
}

/// Scans for deflation from the bottom of the active block, performing any
/// splitting rotations, and reports what the caller should do next.
fn find_step<R: Real>(
    h: &mut Matrix<R>,
    t: &mut Matrix<R>,
    tol: &Tolerances<R>,
    ilast: usize,
    ifrstm: usize,
    ilastm: usize,
    scratch: &mut Scratch<R>,
) -> Result<Step, LinalgError> {
    if ilast == 0 {
        return Ok(Step::Record);
    }
    if tol.negligible_subdiagonal(h, ilast) {
        h[(ilast, ilast - 1)].set_zero();
        return Ok(Step::Record);
    }
    if tol.negligible_diagonal(t, ilast) {
        t[(ilast, ilast)].set_zero();
        return Ok(Step::ClearInfinite);
    }

    for j in (0..ilast).rev() {
        let split_above = if j == 0 {
            true
        } else if tol.negligible_subdiagonal(h, j) {
            h[(j, j - 1)].set_zero();
            true
        } else {
            false
        };

        if !tol.negligible_diagonal(t, j) {
            if split_above {
                return Ok(Step::Sweep(j));
            }
            continue;
        }
        t[(j, j)].set_zero();

        // Two small consecutive subdiagonals also allow a split at the top.
        let mut small_pair = !split_above
            && h[(j, j - 1)].abs().times(&h[(j + 1, j)].abs()) <= h[(j, j)].abs().times(&tol.atol);

        if split_above || small_pair {
            // Zero at the top: peel 1×1 blocks off by rotating rows of H.
            for jch in j..ilast {
                let (rot, r) = Rotation::zeroing(&h[(jch, jch)], &h[(jch + 1, jch)]);
                h[(jch, jch)] = r;
                h[(jch + 1, jch)].set_zero();
                rotate_rows(h, jch, jch + 1, jch + 1..=ilastm, &rot, scratch);
                rotate_rows(t, jch, jch + 1, jch + 1..=ilastm, &rot, scratch);
                if small_pair {
                    h[(jch, jch - 1)] = h[(jch, jch - 1)].scale(&rot.c);
                }
                small_pair = false;
                if !tol.negligible_diagonal(t, jch + 1) {
                    return Ok(if jch + 1 >= ilast {
                        Step::Record
                    } else {
                        Step::Sweep(jch + 1)
                    });
                }
                t[(jch + 1, jch + 1)].set_zero();
            }
            return Ok(Step::ClearInfinite);
        }

        // Chase the zero down to T(ilast, ilast).
        for jch in j..ilast {
            let (rot, r) = Rotation::zeroing(&t[(jch, jch + 1)], &t[(jch + 1, jch + 1)]);
            t[(jch, jch + 1)] = r;
            t[(jch + 1, jch + 1)].set_zero();
            rotate_rows(t, jch, jch + 1, jch + 2..=ilastm, &rot, scratch);
            rotate_rows(h, jch, jch + 1, jch - 1..=ilastm, &rot, scratch);

            let (rot, r) = Rotation::zeroing(&h[(jch + 1, jch)], &h[(jch + 1, jch - 1)]);
            h[(jch + 1, jch)] = r;
            h[(jch + 1, jch - 1)].set_zero();
            rotate_cols(h, jch, jch - 1, ifrstm..=jch, &rot, scratch);
            rotate_cols(t, jch, jch - 1, ifrstm..=jch - 1, &rot, scratch);
        }
        return Ok(Step::ClearInfinite);
    }
    // The j = 0 pass always returns.
    unreachable!("deflation scan fell through")
}
