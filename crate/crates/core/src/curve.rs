//! SINR CCDF curves and threshold grids.

use crate::error::{invalid, Result};
use crate::model::db_to_linear;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Analytic,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    /// Threshold, linear.
    pub t: f64,
    pub ccdf: f64,
    /// Confidence half-width of a Monte-Carlo estimate (3 binomial SE).
    pub half_width: Option<f64>,
    pub provenance: Provenance,
}

/// Ordered samples of a CCDF.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CoverageCurve {
    pub points: Vec<CurvePoint>,
}

impl CoverageCurve {
    pub fn thresholds(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.t)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.ccdf)
    }

    /// Every value in `[0, 1]` and, within each provenance, non-increasing in
    /// `t` up to the points' half-widths.
    pub fn is_valid(&self) -> bool {
        if self.points.iter().any(|p| !(0.0..=1.0).contains(&p.ccdf)) {
            return false;
        }
        for prov in [Provenance::Analytic, Provenance::MonteCarlo] {
            let series: Vec<_> = self.points.iter().filter(|p| p.provenance == prov).collect();
            for w in series.windows(2) {
                if w[1].t < w[0].t {
                    return false;
                }
                let slack = w[0].half_width.unwrap_or(0.0) + w[1].half_width.unwrap_or(0.0);
                if w[1].ccdf > w[0].ccdf + slack + 1e-12 {
                    return false;
                }
            }
        }
        true
    }
}

/// Thresholds in dB from `lo` to `hi` inclusive in steps of `step`.
pub fn db_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(hi >= lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(invalid("grid", format!("bad grid {lo}:{hi}:{step}")));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|i| lo + i as f64 * step).collect())
}

/// Same grid converted to linear thresholds.
pub fn linear_grid_from_db(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    Ok(db_grid(lo, hi, step)?.into_iter().map(db_to_linear).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        assert_eq!(db_grid(-10.0, 20.0, 1.0).unwrap().len(), 31);
        assert_eq!(db_grid(-10.0, 20.0, 0.5).unwrap().len(), 61);
        let g = db_grid(-10.0, 20.0, 0.5).unwrap();
        assert!(g.contains(&1.0));
        assert_eq!(*g.last().unwrap(), 20.0);
        assert!(db_grid(0.0, 1.0, 0.0).is_err());
        assert!(db_grid(2.0, 1.0, 0.5).is_err());
    }

    #[test]
    fn validity_allows_mc_slack() {
        let mk = |t, ccdf, hw| CurvePoint {
            t,
            ccdf,
            half_width: hw,
            provenance: if hw.is_some() {
                Provenance::MonteCarlo
            } else {
                Provenance::Analytic
            },
        };
        let ok = CoverageCurve {
            points: vec![mk(1.0, 0.5, Some(0.01)), mk(2.0, 0.505, Some(0.01))],
        };
        assert!(ok.is_valid());
        let bad = CoverageCurve {
            points: vec![mk(1.0, 0.5, None), mk(2.0, 0.505, None)],
        };
        assert!(!bad.is_valid());
        let out_of_range = CoverageCurve {
            points: vec![mk(1.0, 1.2, None)],
        };
        assert!(!out_of_range.is_valid());
    }
}
