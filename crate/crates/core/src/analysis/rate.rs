use crate::precision::{MPReal, Real};

use super::AnalysisError;

/// One `(ε_P, d_H)` observation.
#[derive(Debug, Clone, PartialEq)]
pub struct RatePoint {
    pub eps: MPReal,
    pub d_h: MPReal,
}

/// Least-squares slope of `ln d_H` against `ln ε_P`.
///
/// Points with `d_H <= 10·floor` are treated as saturated and dropped; pass
/// the reference precision's `ε` as `floor` (or zero to keep everything).
pub fn fit_rate(points: &[RatePoint], floor: &MPReal) -> Result<f64, AnalysisError> {
    let cutoff = floor.times(&MPReal::from_i64(10, floor.context()));
    let mut xy: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| !p.d_h.is_zero() && !p.d_h.is_sign_negative() && p.d_h > cutoff)
        .map(|p| (p.eps.ln_f64(), p.d_h.ln_f64()))
        .collect();
    xy.sort_by(|a, b| a.0.total_cmp(&b.0));
    xy.dedup_by(|a, b| a.0 == b.0);
    if xy.len() < 3 {
        return Err(AnalysisError::InsufficientPoints(xy.len()));
    }
    let n = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Ok(sxy / sxx)
}
