use crate::precision::{MPComplex, MPReal, PrecisionContext, Real};

use super::AnalysisError;

/// Hausdorff distance between two finite point sets, evaluated at the wider
/// of the two operand precisions.
pub fn hausdorff(a: &[MPComplex], b: &[MPComplex]) -> Result<MPReal, AnalysisError> {
    if a.is_empty() || b.is_empty() {
        return Err(AnalysisError::EmptySet);
    }
    let ctx = widest(a.iter().chain(b));
    let a: Vec<MPComplex> = a.iter().map(|z| z.widen(ctx)).collect();
    let b: Vec<MPComplex> = b.iter().map(|z| z.widen(ctx)).collect();
    let ab = directed_sq(&a, &b);
    let ba = directed_sq(&b, &a);
    Ok(if ba > ab { ba } else { ab }.sqrt())
}

/// `max_{x∈from} min_{y∈to} |x−y|²`.
fn directed_sq(from: &[MPComplex], to: &[MPComplex]) -> MPReal {
    let ctx = from[0].context();
    let mut worst = MPReal::zero(ctx);
    let mut t = MPReal::zero(ctx);
    let mut dr = MPReal::zero(ctx);
    let mut di = MPReal::zero(ctx);
    for x in from {
        let mut best: Option<MPReal> = None;
        for y in to {
            dr.clone_from(&x.re);
            dr -= &y.re;
            di.clone_from(&x.im);
            di -= &y.im;
            let mut d = dr.times(&dr);
            t.set_mul(&di, &di);
            d += &t;
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
        let best = best.expect("non-empty target");
        if best > worst {
            worst = best;
        }
    }
    worst
}

fn widest<'a>(points: impl Iterator<Item = &'a MPComplex>) -> PrecisionContext {
    points.map(|z| z.context()).max().expect("non-empty")
}
