//! Average rate `E[ln(1 + SINR)]` of FFR users.
//!
//! Since the rate is non-negative, `E[τ] = ∫₀^∞ P(ln(1+S) > t) dt`, and the
//! integrand is the conditional SINR CCDF at `e^t - 1`. The outer integral is
//! truncated at `t_max_nats` or earlier, once the integrand has fallen below
//! [`TAIL_TOLERANCE`].

use std::cell::RefCell;

use super::coverage::{ccdf, AnalyticOptions, Conditioning, CoverageQuery};
use crate::error::{invalid, Error, Result};
use crate::model::{NetworkParams, ReuseScheme, SchemeKind};
use crate::montecarlo::{estimate_rate, simulate, InterferenceMode, SimConfig};
use crate::quadrature::integrate;

pub const DEFAULT_T_MAX_NATS: f64 = 20.0;
pub const TAIL_TOLERANCE: f64 = 1e-10;
const TAIL_SCAN_STEP: f64 = 0.25;
const OUTER_REL_FLOOR: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateQuery {
    pub params: NetworkParams,
    pub scheme: ReuseScheme,
    pub class: Conditioning,
    pub t_max_nats: f64,
}

impl RateQuery {
    pub fn new(params: NetworkParams, scheme: ReuseScheme, class: Conditioning) -> Self {
        RateQuery {
            params,
            scheme,
            class,
            t_max_nats: DEFAULT_T_MAX_NATS,
        }
    }

    pub fn with_t_max(self, t_max_nats: f64) -> Self {
        RateQuery { t_max_nats, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.t_max_nats > 0.0) || !self.t_max_nats.is_finite() {
            return Err(invalid("t_max_nats", "must be finite and > 0"));
        }
        if !self.scheme.kind().is_ffr() {
            return Err(Error::SchemeMismatch(format!(
                "rate is defined for FFR schemes, got {}",
                self.scheme.kind()
            )));
        }
        if self.class == Conditioning::All {
            return Err(Error::SchemeMismatch("rate needs an edge or interior class".into()));
        }
        self.scheme.validate()
    }

    fn ccdf_at_nats(&self, t: f64, opts: &AnalyticOptions) -> Result<f64> {
        if t <= 0.0 {
            return Ok(1.0);
        }
        let q = CoverageQuery::new(t.exp_m1(), self.params, self.scheme, self.class);
        ccdf(&q, opts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateEstimate {
    /// Average rate in nats/s/Hz.
    pub nats: f64,
    /// Where the outer integral was cut off.
    pub upper_limit: f64,
    /// Integrand value at the cutoff; an upper bound on the per-nat tail mass.
    pub tail_integrand: f64,
}

impl RateEstimate {
    pub fn tail_converged(&self) -> bool {
        self.tail_integrand < TAIL_TOLERANCE
    }
}

fn rate(query: &RateQuery, opts: &AnalyticOptions) -> Result<RateEstimate> {
    query.validate()?;
    let t_max = query.t_max_nats;
    let mut upper = t_max;
    let mut tail = query.ccdf_at_nats(t_max, opts)?;
    let mut t = TAIL_SCAN_STEP;
    while t < t_max {
        let v = query.ccdf_at_nats(t, opts)?;
        if v < TAIL_TOLERANCE {
            upper = t;
            tail = v;
            break;
        }
        t += TAIL_SCAN_STEP;
    }

    let spec = opts.quadrature.with_rel_floor(OUTER_REL_FLOOR);
    let inner = *opts;
    let failure = RefCell::new(None);
    let f = |t: f64| match query.ccdf_at_nats(t, &inner) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            0.0
        }
    };
    // The interior CCDF has a kink at ln(1 + T_FFR).
    let kink = query.scheme.t_ffr().map(f64::ln_1p).filter(|&k| k > 0.0 && k < upper);
    let nats = match (query.class, kink) {
        (Conditioning::Interior, Some(k)) => integrate(f, 0.0, k, &spec)?.value + integrate(f, k, upper, &spec)?.value,
        _ => integrate(f, 0.0, upper, &spec)?.value,
    };
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(RateEstimate {
        nats,
        upper_limit: upper,
        tail_integrand: tail,
    })
}

/// Edge rate under Strict FFR.
pub fn rate_ffr_edge(query: &RateQuery, opts: &AnalyticOptions) -> Result<RateEstimate> {
    if query.scheme.kind() != SchemeKind::StrictFfr || query.class != Conditioning::Edge {
        return Err(Error::SchemeMismatch("rate_ffr_edge needs a Strict FFR edge query".into()));
    }
    rate(query, opts)
}

/// Edge rate under SFR.
pub fn rate_sfr_edge(query: &RateQuery, opts: &AnalyticOptions) -> Result<RateEstimate> {
    if query.scheme.kind() != SchemeKind::Sfr || query.class != Conditioning::Edge {
        return Err(Error::SchemeMismatch("rate_sfr_edge needs an SFR edge query".into()));
    }
    rate(query, opts)
}

/// Rate of either class under either FFR scheme. Interior rates are an
/// extension; the edge forms are the ones checked against simulation.
pub fn rate_analytic(query: &RateQuery, opts: &AnalyticOptions) -> Result<RateEstimate> {
    rate(query, opts)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateConsistency {
    pub analytic: RateEstimate,
    /// Simulated mean of `min(ln(1+S), upper_limit)`, matching the truncation
    /// of the analytic integral.
    pub mc: f64,
    pub half_width: f64,
    pub samples: usize,
    pub pass: bool,
}

/// Analytic rate against the Monte-Carlo engine. SFR is simulated with the
/// consolidated `ηP` interference the analysis assumes.
pub fn rate_generic_mc_consistency(query: &RateQuery, config: &SimConfig, opts: &AnalyticOptions) -> Result<RateConsistency> {
    let analytic = rate(query, opts)?;
    let outcomes = simulate(config, &query.params, &query.scheme, InterferenceMode::EffectiveEta)?;
    let est = estimate_rate(&outcomes, query.class, Some(analytic.upper_limit))?;
    Ok(RateConsistency {
        analytic,
        mc: est.mean,
        half_width: est.half_width,
        samples: est.samples,
        pass: (analytic.nats - est.mean).abs() <= est.half_width,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn query(kind: SchemeKind, beta: f64, t_ffr: f64) -> RateQuery {
        let p = NetworkParams::builder().no_noise().beta(beta).t_ffr(t_ffr).build().unwrap();
        RateQuery::new(p, ReuseScheme::from_params(kind, &p), Conditioning::Edge)
    }

    #[test]
    fn strict_above_sfr() {
        let opts = AnalyticOptions::default();
        let s = rate_ffr_edge(&query(SchemeKind::StrictFfr, 1.0, 1.0), &opts).unwrap();
        let f = rate_sfr_edge(&query(SchemeKind::Sfr, 4.0, 1.0), &opts).unwrap();
        assert!(s.nats > f.nats);
        assert!(s.nats > 0.0 && s.nats.is_finite());
        assert_eq!(s.upper_limit, DEFAULT_T_MAX_NATS);
    }

    #[test]
    fn increases_with_threshold() {
        let opts = AnalyticOptions::default();
        let lo = rate_ffr_edge(&query(SchemeKind::StrictFfr, 1.0, 1.0), &opts).unwrap();
        let hi = rate_ffr_edge(&query(SchemeKind::StrictFfr, 1.0, 10f64.powf(0.3)), &opts).unwrap();
        assert!(hi.nats > lo.nats);
    }

    #[test]
    fn heavy_noise_gives_no_rate() {
        let p = NetworkParams::builder().sigma2(1e8).lambda(1e-6).build().unwrap();
        let q = RateQuery::new(p, ReuseScheme::from_params(SchemeKind::StrictFfr, &p), Conditioning::Edge);
        let r = rate_ffr_edge(&q, &AnalyticOptions::default()).unwrap();
        assert!(r.nats < 1e-4);
        assert!(r.upper_limit < DEFAULT_T_MAX_NATS);
        assert!(r.tail_converged());
    }

    #[test]
    fn rejects_bad_queries() {
        let opts = AnalyticOptions::default();
        let q = query(SchemeKind::Sfr, 4.0, 1.0);
        assert!(rate_ffr_edge(&q, &opts).is_err());
        assert!(rate_analytic(&q.with_t_max(0.0), &opts).is_err());
        let p = NetworkParams::default();
        let q = RateQuery::new(p, ReuseScheme::NoReuse, Conditioning::Edge);
        assert!(rate_analytic(&q, &opts).is_err());
    }
}
