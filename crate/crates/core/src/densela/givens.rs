//! Complex plane rotations `G = [c s; -conj(s) c]` with real `c`.
//!
//! Applying `G` to a pair `(x, y)` gives `x' = c·x + s·y`,
//! `y' = c·y − conj(s)·x`. Every product and sum is rounded individually in
//! a fixed order, so native `f64` and [`MPReal`](crate::precision::MPReal) at
//! 53 bits produce identical results.

use std::ops::RangeInclusive;

use crate::precision::{Complex, Real};

use super::Matrix;

#[derive(Clone, Debug)]
pub struct Rotation<R> {
    pub c: R,
    pub s: Complex<R>,
}

impl<R: Real> Rotation<R> {
    /// Rotation with `G·[f; g] = [r; 0]`, returned with `r`.
    pub fn zeroing(f: &Complex<R>, g: &Complex<R>) -> (Self, Complex<R>) {
        let ctx = f.context();
        if g.is_zero() {
            let rot = Rotation {
                c: R::one(ctx),
                s: Complex::zero(ctx),
            };
            return (rot, f.clone());
        }
        if f.is_zero() {
            let ga = g.abs();
            let rot = Rotation {
                c: R::zero(ctx),
                s: g.conj().unscale(&ga),
            };
            return (rot, Complex::from_real(ga));
        }
        let fa = f.abs();
        let ga = g.abs();
        let d = Complex::new(fa.clone(), ga).abs();
        let phase = f.unscale(&fa);
        let c = fa.over(&d);
        let s = phase.times(&g.conj()).unscale(&d);
        let r = phase.scale(&d);
        (Rotation { c, s }, r)
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_zero()
    }
}

/// Reusable temporaries for [`rotate_pair`].
pub struct Scratch<R> {
    t: [R; 5],
}

impl<R: Real> Scratch<R> {
    pub fn new(ctx: crate::precision::PrecisionContext) -> Self {
        Scratch {
            t: std::array::from_fn(|_| R::zero(ctx)),
        }
    }
}

#[inline]
pub fn rotate_pair<R: Real>(
    rot: &Rotation<R>,
    x: &mut Complex<R>,
    y: &mut Complex<R>,
    scratch: &mut Scratch<R>,
) {
    let [t0, t1, t2, t3, t4] = &mut scratch.t;
    let (c, s) = (&rot.c, &rot.s);
    // s·y
    t0.set_mul(&s.re, &y.re);
    t1.set_mul(&s.im, &y.im);
    *t0 -= &*t1;
    t1.set_mul(&s.re, &y.im);
    t2.set_mul(&s.im, &y.re);
    *t1 += &*t2;
    // conj(s)·x
    t2.set_mul(&s.re, &x.re);
    t3.set_mul(&s.im, &x.im);
    *t2 += &*t3;
    t3.set_mul(&s.re, &x.im);
    t4.set_mul(&s.im, &x.re);
    *t3 -= &*t4;

    x.re *= c;
    x.re += &*t0;
    x.im *= c;
    x.im += &*t1;
    y.re *= c;
    y.re -= &*t2;
    y.im *= c;
    y.im -= &*t3;
}

/// Rotates rows `i` (as x) and `j` (as y) over the given columns.
pub fn rotate_rows<R: Real>(
    m: &mut Matrix<R>,
    i: usize,
    j: usize,
    cols: RangeInclusive<usize>,
    rot: &Rotation<R>,
    scratch: &mut Scratch<R>,
) {
    if rot.is_identity() || cols.is_empty() {
        return;
    }
    let (ri, rj) = m.row_pair_mut(i, j);
    for (x, y) in ri[cols.clone()].iter_mut().zip(rj[cols].iter_mut()) {
        rotate_pair(rot, x, y, scratch);
    }
}

/// Rotates columns `i` (as x) and `j` (as y) over the given rows.
pub fn rotate_cols<R: Real>(
    m: &mut Matrix<R>,
    i: usize,
    j: usize,
    rows: RangeInclusive<usize>,
    rot: &Rotation<R>,
    scratch: &mut Scratch<R>,
) {
    if rot.is_identity() || rows.is_empty() {
        return;
    }
    debug_assert_ne!(i, j);
    for r in rows {
        let row = m.row_mut(r);
        let (x, y) = if i < j {
            let (lo, hi) = row.split_at_mut(j);
            (&mut lo[i], &mut hi[0])
        } else {
            let (lo, hi) = row.split_at_mut(i);
            (&mut hi[0], &mut lo[j])
        };
        rotate_pair(rot, x, y, scratch);
    }
}
