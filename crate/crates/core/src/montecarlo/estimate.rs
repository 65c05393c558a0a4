//! Empirical CCDFs and rates from trial outcomes.

use crate::analytic::Conditioning;
use crate::curve::{CoverageCurve, CurvePoint, Provenance};
use crate::error::{Error, Result};
use crate::model::UserClass;

use super::engine::TrialOutcome;

/// Half-widths are this many standard errors.
pub const CONFIDENCE_Z: f64 = 3.0;

fn selected(o: &TrialOutcome, conditioning: Conditioning) -> bool {
    match conditioning {
        Conditioning::All => true,
        Conditioning::Edge => o.user_class == UserClass::Edge,
        Conditioning::Interior => o.user_class == UserClass::Interior,
    }
}

fn empty(conditioning: Conditioning) -> Error {
    Error::EmptyConditioning(conditioning.name())
}

/// `z √(p̂(1-p̂)/n)`, or the Wilson-interval half-width when `p̂` is 0 or 1.
pub fn binomial_half_width(p: f64, n: usize) -> f64 {
    let n = n as f64;
    let z = CONFIDENCE_Z;
    if p > 0.0 && p < 1.0 {
        z * (p * (1.0 - p) / n).sqrt()
    } else {
        let z2 = z * z;
        z / (1.0 + z2 / n) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt()
    }
}

/// Empirical `P(SINR > t)` of the final SINR over the conditioned outcomes.
pub fn estimate_ccdf(outcomes: &[TrialOutcome], thresholds: &[f64], conditioning: Conditioning) -> Result<CoverageCurve> {
    let mut s: Vec<f64> = outcomes
        .iter()
        .filter(|o| selected(o, conditioning))
        .map(TrialOutcome::sinr)
        .collect();
    if s.is_empty() {
        return Err(empty(conditioning));
    }
    s.sort_by(f64::total_cmp);
    let n = s.len();
    let points = thresholds
        .iter()
        .map(|&t| {
            let above = n - s.partition_point(|&v| v <= t);
            let p = above as f64 / n as f64;
            CurvePoint {
                t,
                ccdf: p,
                half_width: Some(binomial_half_width(p, n)),
                provenance: Provenance::MonteCarlo,
            }
        })
        .collect();
    Ok(CoverageCurve { points })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Proportion {
    pub value: f64,
    pub half_width: f64,
    pub samples: usize,
}

/// Fraction of users classified as edge.
pub fn edge_fraction(outcomes: &[TrialOutcome]) -> Result<Proportion> {
    if outcomes.is_empty() {
        return Err(empty(Conditioning::All));
    }
    let n = outcomes.len();
    let edge = outcomes.iter().filter(|o| o.user_class == UserClass::Edge).count();
    let value = edge as f64 / n as f64;
    Ok(Proportion {
        value,
        half_width: binomial_half_width(value, n),
        samples: n,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSample {
    /// Mean of `ln(1 + SINR)`, nats/s/Hz.
    pub mean: f64,
    /// `z` standard errors of the mean.
    pub half_width: f64,
    pub samples: usize,
}

/// Mean rate `ln(1 + SINR)` of the conditioned users, each capped at `cap`
/// nats when given. Unbounded SINRs need a cap.
pub fn estimate_rate(outcomes: &[TrialOutcome], conditioning: Conditioning, cap: Option<f64>) -> Result<RateSample> {
    let mut n = 0usize;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for o in outcomes.iter().filter(|o| selected(o, conditioning)) {
        let mut r = o.sinr().ln_1p();
        if let Some(c) = cap {
            r = r.min(c);
        }
        if !r.is_finite() {
            return Err(Error::DegenerateSample);
        }
        n += 1;
        sum += r;
        sum_sq += r * r;
    }
    if n == 0 {
        return Err(empty(conditioning));
    }
    let nf = n as f64;
    let mean = sum / nf;
    let var = if n > 1 { ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0) } else { 0.0 };
    Ok(RateSample {
        mean,
        half_width: CONFIDENCE_Z * (var / nf).sqrt(),
        samples: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(pre: f64, post: Option<f64>) -> TrialOutcome {
        TrialOutcome {
            pre_sinr: pre,
            user_class: if post.is_some() { UserClass::Edge } else { UserClass::Interior },
            post_sinr: post,
            subband: 0,
            interferers: 1,
            active_interferers: 1,
            serving_distance: 1.0,
            nearest_interferer: 2.0,
        }
    }

    #[test]
    fn half_width_examples() {
        assert!((binomial_half_width(0.5, 100_000) - 0.00474).abs() < 1e-5);
        let w = binomial_half_width(1.0, 1000);
        assert!(w > 0.0 && w < 0.01);
        assert!(binomial_half_width(0.0, 1000) > 0.0);
    }

    #[test]
    fn ccdf_counts_strictly_above() {
        let out = vec![outcome(2.0, None), outcome(0.1, Some(3.0)), outcome(0.2, Some(0.5))];
        let all = estimate_ccdf(&out, &[0.5, 2.0, 10.0], Conditioning::All).unwrap();
        let v: Vec<f64> = all.values().collect();
        assert_eq!(v, vec![2.0 / 3.0, 1.0 / 3.0, 0.0]);
        let edge = estimate_ccdf(&out, &[1.0], Conditioning::Edge).unwrap();
        assert_eq!(edge.points[0].ccdf, 0.5);
        let top = estimate_ccdf(&out, &[1e-3], Conditioning::All).unwrap();
        assert_eq!(top.points[0].ccdf, 1.0);
        assert!(top.points[0].half_width.unwrap() > 0.0);
    }

    #[test]
    fn empty_conditioning_is_an_error() {
        let out = vec![outcome(2.0, None)];
        assert!(matches!(estimate_ccdf(&out, &[1.0], Conditioning::Edge), Err(Error::EmptyConditioning("edge"))));
        assert!(estimate_rate(&out, Conditioning::Edge, None).is_err());
    }

    #[test]
    fn rate_caps_unbounded_sinr() {
        let out = vec![outcome(0.1, Some(f64::INFINITY)), outcome(0.1, Some(1.0))];
        assert!(estimate_rate(&out, Conditioning::Edge, None).is_err());
        let r = estimate_rate(&out, Conditioning::Edge, Some(20.0)).unwrap();
        assert!((r.mean - (20.0 + 2f64.ln()) / 2.0).abs() < 1e-12);
    }
}
