use rug::Rational;

use crate::densela::MPMatrix;
use crate::precision::{Complex, MPReal, PrecisionContext};

use super::operators::{bc_rows, d2_entry, d4_entry, mult_z2_entry, mult_z_entry};
use super::{ChebError, FlowProfile, Method, OSParams, TauSystem, MIN_TRUNCATION};

pub fn assemble(
    flow: FlowProfile,
    params: &OSParams,
    method: Method,
    n: usize,
    ctx: PrecisionContext,
) -> Result<TauSystem, ChebError> {
    match method {
        Method::D2 => assemble_d2(flow, params, n, ctx),
        Method::D4 => assemble_d4(flow, params, n, ctx),
    }
}

fn check_truncation(n: usize) -> Result<(), ChebError> {
    if n < MIN_TRUNCATION {
        return Err(ChebError::TruncationTooSmall(n));
    }
    Ok(())
}

fn delta(i: usize, p: usize) -> bool {
    i == p
}

/// Rounds the exact value `re + i·im` once to `ctx` and stores it.
fn put(m: &mut MPMatrix, i: usize, j: usize, re: &Rational, im: &Rational, ctx: PrecisionContext) {
    if *re == 0 && *im == 0 {
        return;
    }
    m[(i, j)] = Complex::new(MPReal::from_rational(re, ctx), MPReal::from_rational(im, ctx));
}

fn put_row(m: &mut MPMatrix, i: usize, row: &[Rational], ctx: PrecisionContext) {
    let zero = Rational::new();
    for (j, q) in row.iter().enumerate() {
        put(m, i, j, q, &zero, ctx);
    }
}

/// Split system: `(D²−a²)φ − χ = 0` and
/// `(D²−a²)χ − i·a·Re·(U−c)χ + i·a·Re·U″φ = 0`.
pub fn assemble_d2(flow: FlowProfile, params: &OSParams, n: usize, ctx: PrecisionContext) -> Result<TauSystem, ChebError> {
    check_truncation(n)?;
    let m = n + 3;
    let order = 2 * m;
    let a2 = Rational::from(params.a() * params.a());
    let ar = Rational::from(params.a() * params.re());
    let zero = Rational::new();
    let mut a = MPMatrix::zeros(order, order, ctx);
    let mut b = MPMatrix::zeros(order, order, ctx);

    for i in 0..=n {
        let l2 = m + i;
        for p in 0..m {
            let mut op = d2_entry(i, p);
            if delta(i, p) {
                op -= &a2;
            }
            put(&mut a, i, p, &op, &zero, ctx);

            let phi_im = match flow {
                FlowProfile::Poiseuille if delta(i, p) => Rational::from(-2 * &ar),
                _ => Rational::new(),
            };
            put(&mut a, l2, p, &zero, &phi_im, ctx);

            let chi_im = match flow {
                FlowProfile::Poiseuille => {
                    let mut q = mult_z2_entry(i, p);
                    if delta(i, p) {
                        q -= 1;
                    }
                    q * &ar
                }
                FlowProfile::Couette => -(mult_z_entry(i, p) * &ar),
            };
            put(&mut a, l2, m + p, &op, &chi_im, ctx);
        }
        put(&mut a, i, m + i, &Rational::from(-1), &zero, ctx);
        put(&mut b, l2, m + i, &zero, &Rational::from(-&ar), ctx);
    }

    let (even, odd) = bc_rows(m, false);
    let (even_d, odd_d) = bc_rows(m, true);
    put_row(&mut a, n + 1, &even, ctx);
    put_row(&mut a, n + 2, &odd, ctx);
    put_row(&mut a, m + n + 1, &odd_d, ctx);
    put_row(&mut a, m + n + 2, &even_d, ctx);

    Ok(TauSystem {
        a,
        b,
        n,
        method: Method::D2,
        flow,
        params: params.clone(),
    })
}

/// `(D² − a²)` entry on the full coefficient range.
fn helmholtz(i: usize, p: usize, a2: &Rational) -> Rational {
    let mut q = d2_entry(i, p);
    if delta(i, p) {
        q -= a2;
    }
    q
}

/// Direct system `Lφ = D⁴φ − 2a²D²φ − i·a·Re·(U−c)(D²−a²)φ + (a⁴ + i·a·Re·U″)φ`.
///
/// The products `Π·(D²−a²)` are formed with an inner `(D²−a²)` of `N+3`
/// rows, so they equal the exact projection of `U·(D²−a²)φ` onto `T_0..T_N`.
pub fn assemble_d4(flow: FlowProfile, params: &OSParams, n: usize, ctx: PrecisionContext) -> Result<TauSystem, ChebError> {
    check_truncation(n)?;
    let order = n + 5;
    let a2 = Rational::from(params.a() * params.a());
    let a4 = Rational::from(&a2 * &a2);
    let two_a2 = Rational::from(2 * &a2);
    let ar = Rational::from(params.a() * params.re());
    let zero = Rational::new();
    let mut a = MPMatrix::zeros(order, order, ctx);
    let mut b = MPMatrix::zeros(order, order, ctx);

    for i in 0..=n {
        for p in 0..order {
            let h = helmholtz(i, p, &a2);

            let mut re = d4_entry(i, p);
            re -= Rational::from(&two_a2 * &d2_entry(i, p));
            if delta(i, p) {
                re += &a4;
            }

            let im = match flow {
                FlowProfile::Poiseuille => {
                    // −aRe·(1−z²)(D²−a²) − 2aRe
                    let mut q = -h.clone();
                    for k in [i.wrapping_sub(2), i, i + 2] {
                        if k <= n + 2 {
                            let w = mult_z2_entry(i, k);
                            if w != 0 {
                                q += w * helmholtz(k, p, &a2);
                            }
                        }
                    }
                    if delta(i, p) {
                        q -= 2;
                    }
                    q * &ar
                }
                FlowProfile::Couette => {
                    let mut q = Rational::new();
                    for k in [i.wrapping_sub(1), i + 1] {
                        if k <= n + 2 {
                            let w = mult_z_entry(i, k);
                            if w != 0 {
                                q += w * helmholtz(k, p, &a2);
                            }
                        }
                    }
                    -(q * &ar)
                }
            };
            put(&mut a, i, p, &re, &im, ctx);
            put(&mut b, i, p, &zero, &-Rational::from(&ar * &h), ctx);
        }
    }

    let (even, odd) = bc_rows(order, false);
    let (even_d, odd_d) = bc_rows(order, true);
    put_row(&mut a, n + 1, &even, ctx);
    put_row(&mut a, n + 2, &odd, ctx);
    put_row(&mut a, n + 3, &odd_d, ctx);
    put_row(&mut a, n + 4, &even_d, ctx);

    Ok(TauSystem {
        a,
        b,
        n,
        method: Method::D4,
        flow,
        params: params.clone(),
    })
}
