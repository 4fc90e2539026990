#![allow(dead_code, clippy::needless_range_loop)]

pub mod suites;

use hydrospec::precision::Complex;
use hydrospec::{MPComplex, MPMatrix, MPReal, PrecisionContext, Real};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

pub fn ctx(bits: u32) -> PrecisionContext {
    PrecisionContext::new(bits).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.random_range(lo..=hi)).collect()).collect()
}

/// Exact determinant by fraction-free elimination over the rationals.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut d = Rational::from(1);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else {
            return Rational::new();
        };
        if piv != k {
            a.swap(piv, k);
            d = -d;
        }
        d *= &a[k][k];
        for i in k + 1..n {
            let f = Rational::from(&a[i][k] / &a[k][k]);
            for j in k..n {
                let t = Rational::from(&f * &a[k][j]);
                a[i][j] -= t;
            }
        }
    }
    d
}

/// Coefficients (constant term first) of `det(A − c·B)`, by exact
/// interpolation through `c = 0..=n`.
pub fn char_poly(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Rational> {
    let n = a.len();
    let xs: Vec<Rational> = (0..=n as i64).map(Rational::from).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let m: Vec<Vec<Rational>> = (0..n)
                .map(|i| (0..n).map(|j| Rational::from(a[i][j]) - Rational::from(x * b[i][j])).collect())
                .collect();
            det(&m)
        })
        .collect();
    // Newton divided differences, then expand to monomials.
    let mut dd = ys.clone();
    for level in 1..=n {
        for i in (level..=n).rev() {
            let num = Rational::from(&dd[i] - &dd[i - 1]);
            dd[i] = num / Rational::from(&xs[i] - &xs[i - level]);
        }
    }
    let mut coeffs = vec![Rational::new(); n + 1];
    let mut basis = vec![Rational::from(1)];
    for (k, c) in dd.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            coeffs[j] += Rational::from(c * bj);
        }
        let mut next = vec![Rational::new(); basis.len() + 1];
        for (j, bj) in basis.iter().enumerate() {
            next[j + 1] += bj;
            next[j] -= Rational::from(bj * &xs[k]);
        }
        basis = next;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    coeffs
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = Rational::from(r.last().unwrap() / b.last().unwrap());
        for (j, bj) in b.iter().enumerate() {
            r[j + shift] -= Rational::from(&f * bj);
        }
        r.pop();
        while r.last().is_some_and(|c| *c == 0) {
            r.pop();
        }
    }
    r
}

/// True when the polynomial has no repeated root.
pub fn is_squarefree(p: &[Rational]) -> bool {
    if p.len() <= 2 {
        return true;
    }
    let dp: Vec<Rational> = p.iter().enumerate().skip(1).map(|(k, c)| Rational::from(c * k as i64)).collect();
    let (mut x, mut y) = (p.to_vec(), dp);
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x.len() == 1
}

fn horner(p: &[MPComplex], z: &MPComplex) -> (MPComplex, MPComplex) {
    let ctx = z.context();
    let mut v = MPComplex::zero(ctx);
    let mut d = MPComplex::zero(ctx);
    for c in p.iter().rev() {
        d = d.times(z).plus(&v);
        v = v.times(z).plus(c);
    }
    (v, d)
}

/// Roots of a squarefree polynomial by Aberth–Ehrlich iteration at `ctx`.
pub fn poly_roots(p: &[Rational], ctx: PrecisionContext) -> Vec<MPComplex> {
    let deg = p.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let cs: Vec<MPComplex> = p.iter().map(|q| MPComplex::from_real(MPReal::from_rational(q, ctx))).collect();
    let lead = p[deg].to_f64().abs();
    let radius = 1.0 + p.iter().take(deg).map(|q| q.to_f64().abs() / lead).fold(0.0, f64::max);
    let mut z: Vec<MPComplex> = (0..deg)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
            MPComplex::from_f64(radius * t.cos(), radius * t.sin(), ctx)
        })
        .collect();
    let tol = MPReal::from_f64(2f64.powi(-(ctx.bits() as i32 - 16)), ctx);
    for _ in 0..2000 {
        let mut done = true;
        for k in 0..deg {
            let (v, d) = horner(&cs, &z[k]);
            if v.is_zero() {
                continue;
            }
            let w = v.over(&d);
            let mut s = MPComplex::zero(ctx);
            for j in (0..deg).filter(|&j| j != k) {
                s = s.plus(&MPComplex::from_i64(1, 0, ctx).over(&z[k].minus(&z[j])));
            }
            let step = w.over(&MPComplex::from_i64(1, 0, ctx).minus(&w.times(&s)));
            let scale = MPReal::from_i64(1, ctx).plus(&z[k].abs());
            if step.abs() > tol.times(&scale) {
                done = false;
            }
            z[k] = z[k].minus(&step);
        }
        if done {
            break;
        }
    }
    z
}

pub fn to_matrix(m: &[Vec<i64>], ctx: PrecisionContext) -> MPMatrix {
    MPMatrix::from_i64_rows(m, ctx)
}

fn minor_det(m: &[Vec<MPComplex>], skip_row: usize, skip_col: usize) -> MPComplex {
    let rows: Vec<Vec<MPComplex>> = m
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != skip_col).map(|(_, z)| z.clone()).collect())
        .collect();
    complex_det(&rows)
}

fn complex_det(m: &[Vec<MPComplex>]) -> MPComplex {
    match m.len() {
        0 => unreachable!(),
        1 => m[0][0].clone(),
        n => {
            let ctx = m[0][0].context();
            let mut acc = MPComplex::zero(ctx);
            for j in 0..n {
                let term = m[0][j].times(&minor_det(m, 0, j));
                acc = if j % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
            }
            acc
        }
    }
}

/// First-order sensitivity `‖x‖‖y‖/|yᴴBx|` of a simple eigenvalue `c`,
/// computed from the adjugate of `A − c·B`.
pub fn eigen_condition(a: &[Vec<i64>], b: &[Vec<i64>], c: &MPComplex) -> f64 {
    let ctx = c.context();
    let n = a.len();
    let m: Vec<Vec<MPComplex>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| MPComplex::from_i64(a[i][j], 0, ctx).minus(&c.scale(&MPReal::from_i64(b[i][j], ctx))))
                .collect()
        })
        .collect();
    let mut adj_norm2 = 0.0;
    let mut trace = MPComplex::zero(ctx);
    for i in 0..n {
        for j in 0..n {
            // adj(M)[j][i] = (−1)^{i+j} det(minor_ij)
            let mut cof = if n == 1 { MPComplex::from_i64(1, 0, ctx) } else { minor_det(&m, i, j) };
            if (i + j) % 2 == 1 {
                cof = cof.negated();
            }
            adj_norm2 += cof.abs().to_f64().powi(2);
            // tr(adj(M)·B) = Σ adj[j][i]·B[i][j]
            trace = trace.plus(&cof.scale(&MPReal::from_i64(b[i][j], ctx)));
        }
    }
    adj_norm2.sqrt() / trace.abs().to_f64()
}

pub fn frobenius(m: &[Vec<i64>]) -> f64 {
    m.iter().flatten().map(|&v| (v * v) as f64).sum::<f64>().sqrt()
}

/// Random unitary matrix: Gram–Schmidt on a random complex matrix.
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize, ctx: PrecisionContext) -> MPMatrix {
    let mut cols: Vec<Vec<MPComplex>> = Vec::new();
    while cols.len() < n {
        let mut v: Vec<MPComplex> = (0..n)
            .map(|_| MPComplex::from_f64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), ctx))
            .collect();
        for _ in 0..2 {
            for q in &cols {
                let mut dot = MPComplex::zero(ctx);
                for (qi, vi) in q.iter().zip(&v) {
                    dot = dot.plus(&qi.conj().times(vi));
                }
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi = vi.minus(&dot.times(qi));
                }
            }
        }
        let mut norm = MPReal::zero(ctx);
        for vi in &v {
            let a = vi.abs();
            norm = norm.plus(&a.times(&a));
        }
        let norm = norm.sqrt();
        cols.push(v.iter().map(|vi| vi.unscale(&norm)).collect());
    }
    MPMatrix::from_fn(n, n, ctx, |i, j| cols[j][i].clone())
}

pub fn complex_of(re: f64, im: f64, ctx: PrecisionContext) -> Complex<MPReal> {
    MPComplex::from_f64(re, im, ctx)
}
