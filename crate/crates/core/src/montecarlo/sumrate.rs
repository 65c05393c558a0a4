//! Per-cell sum rate under a sub-band plan.
//!
//! Every sub-band carries one user. Interior sub-bands earn the mean interior
//! rate and edge sub-bands the mean edge rate, so a plan earns
//! `n_int·r_int + n_edge·r_edge`. Universal reuse uses all `n_band` sub-bands
//! at the all-user rate, reuse-Δ uses `⌊n_band/Δ⌋` of them.

use super::engine::{simulate, simulate_sweep, InterferenceMode, SweepTrial, TrialOutcome};
use super::estimate::estimate_rate;
use super::config::SimConfig;
use crate::allocation::{allocation_for_edge, sinr_proportional, AllocationPlan};
use crate::analytic::{AnalyticOptions, Conditioning};
use crate::error::{Error, Result};
use crate::model::{NetworkParams, ReuseScheme, SchemeKind, UserClass};

/// Per-user rates are capped here, which keeps users with no active
/// interferer finite.
pub const RATE_CAP_NATS: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumRate {
    /// Nats/s/Hz summed over the cell's sub-bands.
    pub sum_rate: f64,
    pub edge_rate: f64,
    pub interior_rate: f64,
    pub edge_fraction: f64,
    pub plan: Option<AllocationPlan>,
}

fn class_rate(outcomes: &[TrialOutcome], class: Conditioning) -> Result<f64> {
    match estimate_rate(outcomes, class, Some(RATE_CAP_NATS)) {
        Ok(r) => Ok(r.mean),
        Err(Error::EmptyConditioning(_)) => Ok(0.0),
        Err(e) => Err(e),
    }
}

/// Sum rate of already simulated outcomes. `n_edge` is ignored for the
/// baselines.
pub fn sum_rate_from_outcomes(outcomes: &[TrialOutcome], scheme: &ReuseScheme, n_band: u32, n_edge: u32) -> Result<SumRate> {
    let plan = match scheme.kind() {
        SchemeKind::StrictFfr | SchemeKind::Sfr => Some(allocation_for_edge(scheme.kind(), n_band, n_edge, scheme.delta())?),
        _ => None,
    };
    sum_rate_for_plan(outcomes, scheme, n_band, plan)
}

fn sum_rate_for_plan(outcomes: &[TrialOutcome], scheme: &ReuseScheme, n_band: u32, plan: Option<AllocationPlan>) -> Result<SumRate> {
    if outcomes.is_empty() {
        return Err(Error::EmptyConditioning("all"));
    }
    let edge_rate = class_rate(outcomes, Conditioning::Edge)?;
    let interior_rate = class_rate(outcomes, Conditioning::Interior)?;
    let edge = outcomes.iter().filter(|o| o.user_class == UserClass::Edge).count();
    let edge_fraction = edge as f64 / outcomes.len() as f64;
    let sum_rate = match (scheme.kind(), plan) {
        (SchemeKind::StrictFfr | SchemeKind::Sfr, Some(p)) => {
            if p.n_edge > 0 && edge == 0 {
                return Err(Error::EmptyConditioning("edge"));
            }
            if p.n_int > 0 && edge == outcomes.len() {
                return Err(Error::EmptyConditioning("interior"));
            }
            f64::from(p.n_int) * interior_rate + f64::from(p.n_edge) * edge_rate
        }
        (SchemeKind::NoReuse, _) => f64::from(n_band) * class_rate(outcomes, Conditioning::All)?,
        (SchemeKind::ReuseDelta, _) => f64::from(n_band / scheme.delta()) * class_rate(outcomes, Conditioning::All)?,
        (kind, None) => return Err(Error::SchemeMismatch(format!("{kind} needs a sub-band plan"))),
    };
    Ok(SumRate {
        sum_rate,
        edge_rate,
        interior_rate,
        edge_fraction,
        plan,
    })
}

/// Simulates `scheme` and evaluates one plan.
pub fn sum_rate_experiment(
    config: &SimConfig,
    params: &NetworkParams,
    scheme: &ReuseScheme,
    n_band: u32,
    n_edge: u32,
    mode: InterferenceMode,
) -> Result<SumRate> {
    if scheme.kind().is_ffr() {
        allocation_for_edge(scheme.kind(), n_band, n_edge, scheme.delta())?;
    }
    let outcomes = simulate(config, params, scheme, mode)?;
    sum_rate_from_outcomes(&outcomes, scheme, n_band, n_edge)
}

/// One simulation, one sum rate per `n_edge`. Infeasible plans come back as
/// errors in their slot.
pub fn sum_rate_sweep(
    config: &SimConfig,
    params: &NetworkParams,
    scheme: &ReuseScheme,
    n_band: u32,
    n_edges: &[u32],
    mode: InterferenceMode,
) -> Result<Vec<Result<SumRate>>> {
    let outcomes = simulate(config, params, scheme, mode)?;
    Ok(n_edges
        .iter()
        .map(|&n| sum_rate_from_outcomes(&outcomes, scheme, n_band, n))
        .collect())
}

/// Sum rate with the SINR-proportional plan at each `T_FFR` in `thresholds`.
/// The draws are shared across thresholds.
pub fn sum_rate_proportional_sweep(
    config: &SimConfig,
    params: &NetworkParams,
    kind: SchemeKind,
    n_band: u32,
    thresholds: &[f64],
    mode: InterferenceMode,
    opts: &AnalyticOptions,
) -> Result<Vec<SumRate>> {
    if !kind.is_ffr() {
        return Err(Error::SchemeMismatch(format!("no sub-band plan for {kind}")));
    }
    let base = ReuseScheme::from_params(kind, params);
    let trials: Vec<SweepTrial> = simulate_sweep(config, params, &base, mode)?;
    thresholds
        .iter()
        .map(|&t_ffr| {
            let p = params.to_builder().t_ffr(t_ffr).build()?;
            let scheme = ReuseScheme::from_params(kind, &p);
            let plan = sinr_proportional(&p, &scheme, n_band, opts)?;
            let outcomes: Vec<TrialOutcome> = trials.iter().map(|t| t.classify(t_ffr)).collect();
            sum_rate_for_plan(&outcomes, &scheme, n_band, Some(plan))
        })
        .collect()
}
