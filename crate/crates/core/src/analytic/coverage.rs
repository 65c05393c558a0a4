//! SINR CCDFs for edge and interior users under Strict FFR and SFR, plus the
//! universal-reuse and reuse-Δ baselines.
//!
//! Edge CCDFs are conditioned on the user having failed the FFR threshold on
//! its pre-assignment band and then being moved to a new band with fresh
//! fading and fresh interference, but the same geometry. Interior CCDFs keep
//! the pre-assignment SINR, so they are the baseline CCDF truncated at
//! `T_FFR`.

use rayon::prelude::*;

use super::kernels::{one_minus_v_integral, rho, v_integral, xi_ffr, xi_sfr};
use crate::curve::{CoverageCurve, CurvePoint, Provenance};
use crate::error::{invalid, Error, Result};
use crate::model::{NetworkParams, ReuseScheme, SchemeKind};
use crate::quadrature::QuadratureSpec;

/// Edge-class probabilities below this are reported as a degenerate regime.
pub const DEGENERATE_FLOOR: f64 = 1e-12;

/// Which users a CCDF is conditioned on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conditioning {
    Edge,
    Interior,
    All,
}

impl Conditioning {
    pub fn name(self) -> &'static str {
        match self {
            Conditioning::Edge => "edge",
            Conditioning::Interior => "interior",
            Conditioning::All => "all",
        }
    }
}

/// Normalisation of the SFR edge CCDF.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SfrDenominator {
    /// `1 - p_c(η T_FFR, α, 1)`: probability that the η-weighted
    /// pre-assignment SINR is below `T_FFR`.
    #[default]
    EtaWeighted,
    /// `1 - p_c(T_FFR, λ, α, Δ)`, the reuse-Δ coverage gap.
    Thinned,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AnalyticOptions {
    pub quadrature: QuadratureSpec,
    pub sfr_denominator: SfrDenominator,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageQuery {
    /// SINR threshold, linear.
    pub t: f64,
    pub params: NetworkParams,
    pub scheme: ReuseScheme,
    pub class: Conditioning,
}

impl CoverageQuery {
    pub fn new(t: f64, params: NetworkParams, scheme: ReuseScheme, class: Conditioning) -> Self {
        CoverageQuery {
            t,
            params,
            scheme,
            class,
        }
    }

    /// Same query at another threshold.
    pub fn at(&self, t: f64) -> Self {
        CoverageQuery { t, ..*self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.t > 0.0) || self.t.is_nan() {
            return Err(invalid("t", format!("threshold must be > 0, got {}", self.t)));
        }
        self.scheme.validate()
    }
}

fn expect(query: &CoverageQuery, kind: SchemeKind, class: Conditioning) -> Result<()> {
    query.validate()?;
    if query.scheme.kind() != kind || query.class != class {
        return Err(Error::SchemeMismatch(format!(
            "expected {kind} {} query, got {} {}",
            class.name(),
            query.scheme.kind(),
            query.class.name()
        )));
    }
    Ok(())
}

fn clamp_probability(p: f64) -> f64 {
    p.clamp(0.0, 1.0)
}

fn checked_denominator(probability: f64) -> Result<f64> {
    if probability < DEGENERATE_FLOOR {
        Err(Error::DegenerateRegime {
            probability,
            floor: DEGENERATE_FLOOR,
        })
    } else {
        Ok(probability)
    }
}

/// `V(1 + ρ(k·T), T)`: coverage on a fully loaded band whose interference is
/// scaled by `k` (k = η for SFR, 1 otherwise) with noise seen at threshold `T`.
fn full_band_coverage(params: &NetworkParams, t: f64, scale: f64, spec: &QuadratureSpec) -> Result<f64> {
    let rho = rho(scale * t, params.alpha(), spec)?;
    v_integral(params, 1.0 + rho, t, spec)
}

fn full_band_outage(params: &NetworkParams, t: f64, scale: f64, spec: &QuadratureSpec) -> Result<f64> {
    let rho = rho(scale * t, params.alpha(), spec)?;
    one_minus_v_integral(params, 1.0 + rho, t, spec)
}

fn t_ffr_of(scheme: &ReuseScheme) -> f64 {
    scheme.t_ffr().expect("FFR schemes carry a threshold")
}

/// Probability that a user lands in the edge class under `scheme`
/// (pre-assignment SINR below `T_FFR`). Baselines use `params.t_ffr()`.
pub fn edge_probability(params: &NetworkParams, scheme: &ReuseScheme, opts: &AnalyticOptions) -> Result<f64> {
    let spec = &opts.quadrature;
    match *scheme {
        ReuseScheme::StrictFfr { t_ffr, .. } => full_band_outage(params, t_ffr, 1.0, spec),
        ReuseScheme::Sfr { t_ffr, .. } => full_band_outage(params, t_ffr, scheme.eta(), spec),
        ReuseScheme::NoReuse | ReuseScheme::ReuseDelta { .. } => {
            let t_ffr = params.t_ffr();
            let rho = rho(t_ffr, params.alpha(), spec)?;
            one_minus_v_integral(params, 1.0 + rho / f64::from(scheme.delta()), t_ffr, spec)
        }
    }
}

/// Edge user under Strict FFR: fresh fading and a reuse-Δ band, conditioned
/// on the common-band SINR having been below `T_FFR`.
pub fn ccdf_ffr_edge(query: &CoverageQuery, opts: &AnalyticOptions) -> Result<f64> {
    expect(query, SchemeKind::StrictFfr, Conditioning::Edge)?;
    let spec = &opts.quadrature;
    let p = &query.params;
    let t = query.t;
    let t_ffr = t_ffr_of(&query.scheme);
    let delta = query.scheme.delta();

    let denominator = checked_denominator(full_band_outage(p, t_ffr, 1.0, spec)?)?;
    let rho_t = rho(t, p.alpha(), spec)?;
    let covered = v_integral(p, 1.0 + rho_t / f64::from(delta), t, spec)?;
    let xi = xi_ffr(t, t_ffr, p.alpha(), delta, spec)?;
    let joint = v_integral(p, 1.0 + 2.0 * xi, t + t_ffr, spec)?;
    Ok(clamp_probability((covered - joint) / denominator))
}

/// Interior user under Strict FFR:
/// `p_c(max{T, T_FFR}, λ, α, 1) / p_c(T_FFR, λ, α, 1)`.
pub fn ccdf_ffr_interior(query: &CoverageQuery, opts: &AnalyticOptions) -> Result<f64> {
    expect(query, SchemeKind::StrictFfr, Conditioning::Interior)?;
    interior_ratio(query, 1.0, opts)
}

/// Edge user under SFR: boosted to `βP` on its edge band, all interferers at
/// the consolidated `ηP`.
pub fn ccdf_sfr_edge(query: &CoverageQuery, opts: &AnalyticOptions) -> Result<f64> {
    expect(query, SchemeKind::Sfr, Conditioning::Edge)?;
    let spec = &opts.quadrature;
    let p = &query.params;
    let t = query.t;
    let t_ffr = t_ffr_of(&query.scheme);
    let beta = query.scheme.beta();
    let eta = query.scheme.eta();

    let denominator = match opts.sfr_denominator {
        SfrDenominator::EtaWeighted => full_band_outage(p, t_ffr, eta, spec)?,
        SfrDenominator::Thinned => {
            let rho = rho(t_ffr, p.alpha(), spec)?;
            one_minus_v_integral(p, 1.0 + rho / f64::from(query.scheme.delta()), t_ffr, spec)?
        }
    };
    let denominator = checked_denominator(denominator)?;

    let t_noise = t / beta;
    let rho_t = rho(eta * t_noise, p.alpha(), spec)?;
    let covered = v_integral(p, 1.0 + rho_t, t_noise, spec)?;
    let xi = xi_sfr(t, t_ffr, p.alpha(), beta, eta, spec)?;
    let joint = v_integral(p, 1.0 + 2.0 * xi, t_noise + t_ffr, spec)?;
    Ok(clamp_probability((covered - joint) / denominator))
}

/// Interior user under SFR:
/// `p_c(η max{T, T_FFR}, α, 1) / p_c(η T_FFR, α, 1)`.
pub fn ccdf_sfr_interior(query: &CoverageQuery, opts: &AnalyticOptions) -> Result<f64> {
    expect(query, SchemeKind::Sfr, Conditioning::Interior)?;
    interior_ratio(query, query.scheme.eta(), opts)
}

fn interior_ratio(query: &CoverageQuery, scale: f64, opts: &AnalyticOptions) -> Result<f64> {
    let t_ffr = t_ffr_of(&query.scheme);
    if query.t <= t_ffr {
        return Ok(1.0);
    }
    let spec = &opts.quadrature;
    let numerator = full_band_coverage(&query.params, query.t, scale, spec)?;
    let denominator = full_band_coverage(&query.params, t_ffr, scale, spec)?;
    Ok(clamp_probability(numerator / denominator))
}

/// Universal reuse or reuse-Δ. No reassignment happens, so an edge user keeps
/// its sub-`T_FFR` SINR and the edge CCDF is zero from `T_FFR` on.
pub fn ccdf_baseline(query: &CoverageQuery, opts: &AnalyticOptions) -> Result<f64> {
    query.validate()?;
    let delta = match query.scheme {
        ReuseScheme::NoReuse | ReuseScheme::ReuseDelta { .. } => f64::from(query.scheme.delta()),
        _ => {
            return Err(Error::SchemeMismatch(format!(
                "baseline CCDF asked for {}",
                query.scheme.kind()
            )))
        }
    };
    let spec = &opts.quadrature;
    let p = &query.params;
    let pc = |t: f64| -> Result<f64> { v_integral(p, 1.0 + rho(t, p.alpha(), spec)? / delta, t, spec) };
    let t = query.t;
    let t_ffr = p.t_ffr();
    let value = match query.class {
        Conditioning::All => pc(t)?,
        Conditioning::Interior => {
            if t <= t_ffr {
                1.0
            } else {
                pc(t)? / pc(t_ffr)?
            }
        }
        Conditioning::Edge => {
            let outage = checked_denominator(one_minus_v_integral(
                p,
                1.0 + rho(t_ffr, p.alpha(), spec)? / delta,
                t_ffr,
                spec,
            )?)?;
            if t >= t_ffr {
                0.0
            } else {
                (pc(t)? - pc(t_ffr)?) / outage
            }
        }
    };
    Ok(clamp_probability(value))
}

/// Dispatches on scheme and class.
pub fn ccdf(query: &CoverageQuery, opts: &AnalyticOptions) -> Result<f64> {
    match (query.scheme.kind(), query.class) {
        (SchemeKind::StrictFfr, Conditioning::Edge) => ccdf_ffr_edge(query, opts),
        (SchemeKind::StrictFfr, Conditioning::Interior) => ccdf_ffr_interior(query, opts),
        (SchemeKind::Sfr, Conditioning::Edge) => ccdf_sfr_edge(query, opts),
        (SchemeKind::Sfr, Conditioning::Interior) => ccdf_sfr_interior(query, opts),
        (SchemeKind::NoReuse | SchemeKind::ReuseDelta, _) => ccdf_baseline(query, opts),
        (kind, Conditioning::All) => Err(Error::SchemeMismatch(format!(
            "{kind} CCDF needs an edge or interior class"
        ))),
    }
}

/// Analytic CCDF over a grid of linear thresholds, evaluated in parallel.
pub fn analytic_curve(template: &CoverageQuery, thresholds: &[f64], opts: &AnalyticOptions) -> Result<CoverageCurve> {
    let values: Result<Vec<f64>> = thresholds
        .par_iter()
        .map(|&t| ccdf(&template.at(t), opts))
        .collect();
    let points = thresholds
        .iter()
        .zip(values?)
        .map(|(&t, ccdf)| CurvePoint {
            t,
            ccdf,
            half_width: None,
            provenance: Provenance::Analytic,
        })
        .collect();
    Ok(CoverageCurve { points })
}
