//! Property suites that are run both as ordinary tests and from the CLI
//! acceptance harness. Each one panics on the first violation.

use hydrospec::analysis::{filter_points, hausdorff, Region};
use hydrospec::chebtau::{bc_rows, d2_matrix, d4_matrix, mult_z, mult_z2};
use hydrospec::precision::machine_epsilon;
use hydrospec::{eigenvalues, MPComplex, MPMatrix, MPReal, PrecisionContext, QZConfig, Real};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rug::{Integer, Rational};

use super::*;

/// Monomial coefficients of each `T_k`, `k < len`.
pub fn chebyshev_polys(len: usize) -> Vec<Vec<Rational>> {
    let mut t: Vec<Vec<Rational>> = vec![vec![Rational::from(1)], vec![Rational::new(), Rational::from(1)]];
    while t.len() < len {
        let k = t.len();
        let mut next = vec![Rational::new(); k + 1];
        for (j, c) in t[k - 1].iter().enumerate() {
            next[j + 1] += Rational::from(c * 2);
        }
        for (j, c) in t[k - 2].iter().enumerate() {
            next[j] -= c;
        }
        t.push(next);
    }
    t.truncate(len);
    t
}

pub fn cheb_to_mono(c: &[Rational]) -> Vec<Rational> {
    let t = chebyshev_polys(c.len().max(2));
    let mut m = vec![Rational::new(); c.len()];
    for (ck, tk) in c.iter().zip(&t) {
        for (j, a) in tk.iter().enumerate() {
            m[j] += Rational::from(ck * a);
        }
    }
    m
}

pub fn mono_to_cheb(m: &[Rational]) -> Vec<Rational> {
    let t = chebyshev_polys(m.len().max(2));
    let mut rest = m.to_vec();
    let mut c = vec![Rational::new(); m.len()];
    for k in (0..m.len()).rev() {
        let f = Rational::from(&rest[k] / &t[k][k]);
        for (j, a) in t[k].iter().enumerate() {
            rest[j] -= Rational::from(&f * a);
        }
        c[k] = f;
    }
    c
}

fn derivative(m: &[Rational], times: usize) -> Vec<Rational> {
    let mut d = m.to_vec();
    for _ in 0..times {
        d = d.iter().enumerate().skip(1).map(|(k, a)| Rational::from(a * k as i64)).collect();
    }
    d
}

fn shift(m: &[Rational], by: usize) -> Vec<Rational> {
    let mut out = vec![Rational::new(); by];
    out.extend_from_slice(m);
    out
}

fn random_coeffs(r: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| Rational::from((r.random_range(-50i64..=50), r.random_range(1i64..=9))))
        .collect()
}

pub fn leading(mut v: Vec<Rational>, len: usize) -> Vec<Rational> {
    v.resize(len, Rational::new());
    v
}

fn dot(row: &[Rational], v: &[Rational]) -> Rational {
    row.iter().zip(v).map(|(a, b)| Rational::from(a * b)).sum()
}

/// D², D⁴, z· and z²· against exact calculus in the monomial basis.
pub fn operator_exactness() {
    let mut r = rng(21);
    for n in [4usize, 7, 12, 20] {
        let phi = random_coeffs(&mut r, n + 5);
        let mono = cheb_to_mono(&phi);
        assert_eq!(mono_to_cheb(&mono), phi);
        let want2 = leading(mono_to_cheb(&derivative(&cheb_to_mono(&phi[..n + 3]), 2)), n + 1);
        assert_eq!(d2_matrix(n).apply(&phi), want2, "D2 N={n}");
        let want4 = leading(mono_to_cheb(&derivative(&mono, 4)), n + 1);
        assert_eq!(d4_matrix(n).apply(&phi), want4, "D4 N={n}");

        let short = &phi[..n + 3];
        let m = cheb_to_mono(short);
        assert_eq!(mult_z(n).apply(short), leading(mono_to_cheb(&shift(&m, 1)), n + 1), "z N={n}");
        assert_eq!(mult_z2(n).apply(short), leading(mono_to_cheb(&shift(&m, 2)), n + 1), "z² N={n}");
    }
}

/// The clamped profile (1 − z²)² meets all four boundary rows exactly.
pub fn bc_residual() {
    let mono: Vec<Rational> = [1, 0, -2, 0, 1].into_iter().map(Rational::from).collect();
    let c = mono_to_cheb(&mono);
    for ncols in [5usize, 9, 30] {
        let phi = leading(c.clone(), ncols);
        let (even, odd) = bc_rows(ncols, false);
        let (even_d, odd_d) = bc_rows(ncols, true);
        for row in [&even, &odd, &even_d, &odd_d] {
            assert_eq!(dot(row, &phi), 0, "ncols={ncols}");
        }
    }
    // z itself violates the odd Dirichlet row
    let (_, odd) = bc_rows(5, false);
    let z = leading(mono_to_cheb(&[Rational::new(), Rational::from(1)]), 5);
    assert_ne!(dot(&odd, &z), 0);
}

pub struct Case {
    pub a: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
}

/// 120 pencils of each order 3 and 4, entries in [−5, 5]; every third has B = I.
pub fn qz_corpus() -> Vec<Case> {
    let mut r = rng(0x5eed_0001);
    let mut cases = Vec::new();
    for n in [3, 4] {
        for k in 0..120 {
            let a = random_int_matrix(&mut r, n, -5, 5);
            let b = match k % 3 {
                0 => (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect(),
                _ => random_int_matrix(&mut r, n, -5, 5),
            };
            cases.push(Case { a, b });
        }
    }
    cases
}

/// QZ at 160 bits against characteristic-polynomial roots at 640 bits.
/// Returns the number of pencils compared.
pub fn qz_oracle_equivalence() -> usize {
    let p_ctx = ctx(160);
    let o_ctx = ctx(640);
    let mut checked = 0;
    for (idx, case) in qz_corpus().iter().enumerate() {
        let n = case.a.len();
        let poly = char_poly(&case.a, &case.b);
        let degree = poly.len() - 1;
        if poly.iter().all(|c| *c == 0) || !is_squarefree(&poly) {
            // singular pencils and repeated roots are outside this oracle
            continue;
        }
        let roots = poly_roots(&poly, o_ctx);
        let spec = eigenvalues(to_matrix(&case.a, p_ctx), to_matrix(&case.b, p_ctx), &QZConfig::default()).unwrap();
        assert_eq!(spec.finite.len(), degree, "case {idx}: finite count");
        assert_eq!(spec.infinite_count, n - degree, "case {idx}: infinite count");

        let eps = p_ctx.epsilon().to_f64();
        let (na, nb) = (frobenius(&case.a), frobenius(&case.b));
        for c in &roots {
            let kappa = eigen_condition(&case.a, &case.b, c);
            let tol = 1e2 * eps * (na + c.abs().to_f64() * nb) * kappa;
            let nearest = spec
                .finite
                .iter()
                .map(|z| z.widen(o_ctx).minus(c).abs().to_f64())
                .fold(f64::INFINITY, f64::min);
            assert!(nearest <= tol, "case {idx}: root {c} missed by {nearest:e} > {tol:e}");
        }
        checked += 1;
    }
    assert!(checked >= 200, "only {checked} corpus pencils were usable");
    checked
}

fn random_points(r: &mut ChaCha8Rng, c: PrecisionContext) -> Vec<MPComplex> {
    let len = r.random_range(1..12);
    (0..len)
        .map(|_| MPComplex::from_f64(r.random_range(-2.0..2.0), r.random_range(-2.0..2.0), c))
        .collect()
}

/// Identity, symmetry and the triangle inequality on seeded random sets,
/// plus idempotence of the region filter.
pub fn hausdorff_axioms() {
    let c = ctx(120);
    let mut r = rng(0xd157);
    for _ in 0..200 {
        let (x, y, z) = (random_points(&mut r, c), random_points(&mut r, c), random_points(&mut r, c));
        assert!(hausdorff(&x, &x).unwrap().is_zero());
        let xy = hausdorff(&x, &y).unwrap();
        assert_eq!(xy, hausdorff(&y, &x).unwrap());
        let yz = hausdorff(&y, &z).unwrap();
        let xz = hausdorff(&x, &z).unwrap();
        let slack = MPReal::from_i64(4, c).times(&c.epsilon()).times(&xy.plus(&yz));
        assert!(xz <= xy.plus(&yz).plus(&slack), "triangle inequality: {xz} > {xy} + {yz}");

        let q = Region::new(-1.0, 1.0, -1.0, 0.5).unwrap();
        let once = filter_points(&x, &q);
        assert_eq!(filter_points(&once, &q), once);
    }
    assert!(hausdorff(&[], &[MPComplex::zero(c)]).is_err());
}

fn random_complex(r: &mut ChaCha8Rng, n: usize, c: PrecisionContext) -> MPMatrix {
    MPMatrix::from_fn(n, n, c, |_, _| MPComplex::from_i64(r.random_range(-5..=5), r.random_range(-5..=5), c))
}

/// Spectra of (A, B) and (QAZ, QBZ) at n = 6 agree to a small multiple
/// of `ε_P ‖A‖`.
pub fn unitary_invariance() {
    for (seed, p) in [(1u64, 64u32), (2, 113), (3, 200)] {
        let lo = ctx(p);
        let hi = ctx(4 * p);
        let mut r = rng(seed);
        let n = 6;
        let a = random_complex(&mut r, n, hi);
        let b = MPMatrix::from_fn(n, n, hi, |i, j| {
            let d = if i == j { 12 } else { 0 };
            MPComplex::from_i64(d + r.random_range(-2..=2), r.random_range(-2..=2), hi)
        });
        let q = random_unitary(&mut r, n, hi);
        let z = random_unitary(&mut r, n, hi);
        let qa = q.matmul(&a).unwrap().matmul(&z).unwrap();
        let qb = q.matmul(&b).unwrap().matmul(&z).unwrap();

        let cfg = QZConfig::default();
        let s1 = eigenvalues(a.with_precision(lo), b.with_precision(lo), &cfg).unwrap();
        let s2 = eigenvalues(qa.with_precision(lo), qb.with_precision(lo), &cfg).unwrap();
        assert_eq!(s1.finite.len(), n);
        assert_eq!(s2.finite.len(), n);
        let d = hausdorff(&s1.finite, &s2.finite).unwrap();
        let tol = lo.epsilon().times(&MPReal::from_i64(1000, lo)).times(&a.with_precision(lo).frobenius_norm());
        assert!(d <= tol, "P={p}: d_H {d} exceeds {tol}");
    }
}

/// `ε_P = 2^(1−P)` exactly, `1 + ε_P` is the successor of one and
/// `1 + ε_P/2` rounds back to one.
pub fn epsilon_identity(bits: u32) {
    let e = machine_epsilon(bits).unwrap();
    let c = e.context();
    assert_eq!(c.bits(), bits);
    assert_eq!(e.to_rational(), Rational::from((1, Integer::from(1) << (bits - 1))));
    let one = MPReal::from_i64(1, c);
    let half = e.over(&MPReal::from_i64(2, c));
    assert_eq!(one.plus(&half), one);
    assert!(one.plus(&e) > one);
}

pub fn epsilon_identities() {
    for bits in [2u32, 24, 53, 64, 113, 146, 237, 1000, 4096] {
        epsilon_identity(bits);
    }
    assert_eq!(machine_epsilon(53).unwrap().to_f64(), f64::EPSILON);
    assert!(machine_epsilon(1).is_err());
}
