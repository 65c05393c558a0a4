//! Sub-band partitioning between interior and edge users.
//!
//! Strict FFR hands each cell `N_edge` of the `Δ·N_edge` sub-bands set aside
//! for edge users, so that spectrum sits partly idle. SFR gives every cell
//! all `N_band` sub-bands and only moves `N_edge` of them to high power.

use std::fmt;

use crate::analytic::{ccdf, AnalyticOptions, Conditioning, CoverageQuery};
use crate::error::{invalid, Error, Result};
use crate::model::{NetworkParams, ReuseScheme, SchemeKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AllocationPlan {
    pub scheme: SchemeKind,
    pub n_band: u32,
    pub n_int: u32,
    pub n_edge: u32,
    pub delta: u32,
    /// Sub-bands one cell actually transmits on.
    pub utilized: u32,
    /// Set when a sizing rule asked for more edge sub-bands than fit.
    pub clamped: bool,
}

impl AllocationPlan {
    pub fn idle(&self) -> u32 {
        self.n_band - self.utilized
    }

    /// Largest feasible `n_edge` for the scheme.
    pub fn max_edge(scheme: SchemeKind, n_band: u32, delta: u32) -> u32 {
        match scheme {
            SchemeKind::StrictFfr | SchemeKind::Sfr => n_band / delta.max(1),
            _ => 0,
        }
    }

    pub fn is_consistent(&self) -> bool {
        match self.scheme {
            SchemeKind::StrictFfr => {
                self.n_int <= self.n_band
                    && self.n_edge == (self.n_band - self.n_int) / self.delta
                    && self.utilized == self.n_int + self.n_edge
                    && self.utilized <= self.n_band
            }
            SchemeKind::Sfr => {
                self.n_edge <= self.n_band / self.delta
                    && self.n_int == self.n_band - self.n_edge
                    && self.utilized == self.n_band
            }
            _ => false,
        }
    }
}

impl fmt::Display for AllocationPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scheme = {}", self.scheme)?;
        writeln!(f, "n_band = {}", self.n_band)?;
        writeln!(f, "n_int = {}", self.n_int)?;
        writeln!(f, "n_edge = {}", self.n_edge)?;
        writeln!(f, "delta = {}", self.delta)?;
        writeln!(f, "utilized = {}", self.utilized)?;
        writeln!(f, "idle = {}", self.idle())?;
        write!(f, "clamped = {}", self.clamped)
    }
}

fn check(n_band: u32, delta: u32) -> Result<()> {
    if n_band == 0 {
        return Err(invalid("n_band", "must be > 0"));
    }
    if delta == 0 {
        return Err(invalid("delta", "must be >= 1"));
    }
    Ok(())
}

/// Strict FFR with `n_int` interior sub-bands; the rest is split into `Δ`
/// edge groups of `⌊(n_band - n_int)/Δ⌋`.
pub fn strict_allocation(n_band: u32, n_int: u32, delta: u32) -> Result<AllocationPlan> {
    check(n_band, delta)?;
    if n_int > n_band {
        return Err(Error::InfeasibleAllocation(format!("n_int = {n_int} exceeds n_band = {n_band}")));
    }
    let n_edge = (n_band - n_int) / delta;
    Ok(AllocationPlan {
        scheme: SchemeKind::StrictFfr,
        n_band,
        n_int,
        n_edge,
        delta,
        utilized: n_int + n_edge,
        clamped: false,
    })
}

/// Strict FFR plan with `n_edge` edge sub-bands per cell and every remaining
/// sub-band given to interior users.
pub fn strict_allocation_for_edge(n_band: u32, n_edge: u32, delta: u32) -> Result<AllocationPlan> {
    check(n_band, delta)?;
    let reserved = n_edge.checked_mul(delta).filter(|&r| r <= n_band).ok_or_else(|| {
        Error::InfeasibleAllocation(format!("n_edge = {n_edge} needs more than n_band = {n_band} sub-bands at delta = {delta}"))
    })?;
    strict_allocation(n_band, n_band - reserved, delta)
}

/// SFR with `n_edge` high-power sub-bands per cell, `n_edge ≤ ⌊n_band/Δ⌋`.
pub fn sfr_allocation(n_band: u32, n_edge: u32, delta: u32) -> Result<AllocationPlan> {
    check(n_band, delta)?;
    let limit = n_band / delta;
    if n_edge > limit {
        return Err(Error::InfeasibleAllocation(format!(
            "n_edge = {n_edge} exceeds n_band / delta = {limit}"
        )));
    }
    Ok(AllocationPlan {
        scheme: SchemeKind::Sfr,
        n_band,
        n_int: n_band - n_edge,
        n_edge,
        delta,
        utilized: n_band,
        clamped: false,
    })
}

/// Plan with `n_edge` edge sub-bands for either FFR scheme.
pub fn allocation_for_edge(scheme: SchemeKind, n_band: u32, n_edge: u32, delta: u32) -> Result<AllocationPlan> {
    match scheme {
        SchemeKind::StrictFfr => strict_allocation_for_edge(n_band, n_edge, delta),
        SchemeKind::Sfr => sfr_allocation(n_band, n_edge, delta),
        other => Err(Error::SchemeMismatch(format!("no sub-band plan for {other}"))),
    }
}

/// Sizes the edge allocation to the edge users' coverage shortfall:
/// `n_edge = ⌊(1 - F̄_e(T_FFR)) n_band⌋`, where `F̄_e` is the scheme's
/// analytic edge CCDF. Requests beyond `⌊n_band/Δ⌋` are clamped and flagged.
pub fn sinr_proportional(
    params: &NetworkParams,
    scheme: &ReuseScheme,
    n_band: u32,
    opts: &AnalyticOptions,
) -> Result<AllocationPlan> {
    let t_ffr = scheme
        .t_ffr()
        .ok_or_else(|| Error::SchemeMismatch(format!("no sub-band plan for {}", scheme.kind())))?;
    let delta = scheme.delta();
    check(n_band, delta)?;
    let covered = ccdf(&CoverageQuery::new(t_ffr, *params, *scheme, Conditioning::Edge), opts)?;
    let wanted = ((1.0 - covered) * f64::from(n_band)).floor().max(0.0) as u32;
    let limit = AllocationPlan::max_edge(scheme.kind(), n_band, delta);
    let n_edge = wanted.min(limit);
    let mut plan = allocation_for_edge(scheme.kind(), n_band, n_edge, delta)?;
    plan.clamped = wanted > limit;
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn strict_examples() {
        let p = strict_allocation(48, 24, 3).unwrap();
        assert_eq!((p.n_edge, p.utilized, p.idle()), (8, 32, 16));
        assert_eq!(strict_allocation(48, 48, 3).unwrap().n_edge, 0);
        assert_eq!(strict_allocation(48, 0, 3).unwrap().n_edge, 16);
        assert!(strict_allocation(48, 49, 3).is_err());
        let p = strict_allocation_for_edge(48, 8, 3).unwrap();
        assert_eq!((p.n_int, p.n_edge), (24, 8));
        assert!(strict_allocation_for_edge(48, 17, 3).is_err());
    }

    #[test]
    fn sfr_examples() {
        let p = sfr_allocation(48, 16, 3).unwrap();
        assert_eq!((p.n_int, p.utilized), (32, 48));
        assert!(matches!(sfr_allocation(48, 17, 3), Err(Error::InfeasibleAllocation(_))));
        let p = sfr_allocation(48, 0, 3).unwrap();
        assert_eq!((p.n_int, p.n_edge), (48, 0));
    }

    #[test]
    fn proportional_examples() {
        let opts = AnalyticOptions::default();
        let params = NetworkParams::builder().no_noise().t_ffr(1.0).build().unwrap();
        let strict = ReuseScheme::from_params(SchemeKind::StrictFfr, &params);
        let plan = sinr_proportional(&params, &strict, 48, &opts).unwrap();
        assert_eq!(plan.n_edge, 16);
        assert!(!plan.clamped);

        let tiny = params.to_builder().t_ffr(1e-6).build().unwrap();
        let s = ReuseScheme::from_params(SchemeKind::StrictFfr, &tiny);
        assert_eq!(sinr_proportional(&tiny, &s, 48, &opts).unwrap().n_edge, 0);

        let high = params.to_builder().t_ffr(10.0).beta(4.0).build().unwrap();
        let sfr = ReuseScheme::from_params(SchemeKind::Sfr, &high);
        let plan = sinr_proportional(&high, &sfr, 48, &opts).unwrap();
        assert!(plan.clamped);
        assert_eq!(plan.n_edge, 16);
        assert!(plan.is_consistent());

        assert!(sinr_proportional(&params, &ReuseScheme::NoReuse, 48, &opts).is_err());
    }

    #[test]
    fn proportional_is_monotone_in_threshold() {
        let opts = AnalyticOptions::default();
        for kind in [SchemeKind::StrictFfr, SchemeKind::Sfr] {
            let mut last = 0;
            for db in -10..=10 {
                let p = NetworkParams::builder().no_noise().beta(2.0).t_ffr_db(f64::from(db)).build().unwrap();
                let plan = sinr_proportional(&p, &ReuseScheme::from_params(kind, &p), 48, &opts).unwrap();
                assert!(plan.n_edge >= last, "{kind} at {db} dB");
                last = plan.n_edge;
            }
        }
    }

    proptest! {
        #[test]
        fn plans_satisfy_invariants(n_band in 1u32..200, delta in 1u32..8, x in 0u32..200) {
            if let Ok(p) = strict_allocation(n_band, x, delta) {
                prop_assert!(p.is_consistent());
            } else {
                prop_assert!(x > n_band);
            }
            match sfr_allocation(n_band, x, delta) {
                Ok(p) => prop_assert!(p.is_consistent()),
                Err(_) => prop_assert!(x > n_band / delta),
            }
            if let Ok(p) = strict_allocation_for_edge(n_band, x, delta) {
                prop_assert!(p.is_consistent());
                prop_assert_eq!(p.n_edge, x);
            }
        }
    }
}
