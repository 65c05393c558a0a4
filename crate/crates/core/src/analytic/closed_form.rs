//! Closed forms for the edge CCDFs at `σ² = 0`, `α = 4`.
//!
//! With `Y = x^-4` both edge kernels split by partial fractions into
//! `ρ`-terms, since `∫₁^∞ aY/(1+aY) x dx = ρ(a, 4)/2`:
//!
//! ```text
//! ξ = ρ(a)/2 + w · (b/2) · (ρ(a) - ρ(b)) / (a - b)
//! ```
//!
//! Strict FFR uses `a = T_FFR`, `b = T`, `w = 1/Δ`; SFR uses `a = η T_FFR`,
//! `b = η T / β`, `w = 1`. At `a = b` the difference quotient becomes
//! `ρ'(a)`. The forms as they appear in print are kept as
//! [`ClosedFormVariant::AsPrinted`] for comparison; they do not agree with the
//! kernel integrals away from the limit point.

use std::f64::consts::PI;

use super::coverage::{Conditioning, CoverageQuery, AnalyticOptions, SfrDenominator, DEGENERATE_FLOOR};
use super::kernels::{rho_alpha4, xi_sfr};
use crate::error::{Error, Result};
use crate::model::{ReuseScheme, SchemeKind};

/// Relative distance below which the limit branch is used.
pub const LIMIT_BRANCH_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClosedFormVariant {
    /// Partial-fraction forms; agree with quadrature to rounding.
    #[default]
    Derived,
    /// Expressions transcribed as published.
    AsPrinted,
}

/// `d/dT ρ(T, 4)`.
pub fn rho_alpha4_derivative(t: f64) -> f64 {
    let s = t.sqrt();
    s.atan() / (2.0 * s) + 1.0 / (2.0 * (1.0 + t))
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= LIMIT_BRANCH_TOL * a.abs().max(b.abs())
}

/// `b (ρ(a) - ρ(b)) / (a - b)`, with its `a = b` limit.
fn split_term(a: f64, b: f64) -> f64 {
    if near(a, b) {
        b * rho_alpha4_derivative(0.5 * (a + b))
    } else {
        b * (rho_alpha4(a) - rho_alpha4(b)) / (a - b)
    }
}

/// Strict-FFR edge kernel at `α = 4`.
pub fn xi_ffr_alpha4(t: f64, t_ffr: f64, delta: u32) -> f64 {
    rho_alpha4(t_ffr) / 2.0 + split_term(t_ffr, t) / (2.0 * f64::from(delta))
}

/// Strict-FFR kernel as printed: the generic form for `T ≠ T_FFR` and the
/// limit form otherwise.
pub fn xi_ffr_alpha4_printed(t: f64, t_ffr: f64, delta: u32) -> f64 {
    let d = f64::from(delta);
    let (tt, f) = (t, t_ffr);
    if near(tt, f) {
        let sf = f.sqrt();
        return sf * PI * (2.0 * d + 1.0) / (8.0 * d) + 2.0 * f / (8.0 * (f + 1.0) * d)
            - sf * (2.0 * d + 1.0) * (PI / 2.0 - sf.atan()) / (4.0 * d);
    }
    let num1 = 2.0 * tt.powf(1.5) * (1.0 / tt.sqrt()).atan()
        - 2.0 * (1.0 / f.sqrt()).atan() * (f.powf(1.5) * d - tt * f.sqrt() * (1.0 + d));
    let num2 = PI * (tt.powf(1.5) + f.powf(1.5)) * d + PI * tt * f.sqrt() * (1.0 - d);
    (num1 - num2) / (4.0 * d * (f - tt))
}

/// SFR edge kernel at `α = 4`.
pub fn xi_sfr_alpha4(t: f64, t_ffr: f64, beta: f64, eta: f64) -> f64 {
    let a = eta * t_ffr;
    let b = eta * t / beta;
    rho_alpha4(a) / 2.0 + split_term(a, b) / 2.0
}

/// SFR kernel as printed. The limit form is used for `T = T_FFR`; both forms
/// are singular at `β = 1`, where `None` is returned.
pub fn xi_sfr_alpha4_printed(t: f64, t_ffr: f64, beta: f64, eta: f64) -> Option<f64> {
    let (tt, f, b, e) = (t, t_ffr, beta, eta);
    let value = if near(tt, f) {
        if b == 1.0 {
            return None;
        }
        let sef = (e * f).sqrt();
        sef * (2.0 * (b / (e * f * b).sqrt()).atan() - PI) / (4.0 * b.sqrt() * (b - 1.0))
            - (2.0 * b * sef * (1.0 / sef).atan() + PI) / (4.0 * (b - 1.0))
    } else {
        let gap = tt - f * b;
        e.powf(1.5) * tt * b / (4.0 * f.sqrt() * gap)
            - e * b * tt.powi(3) * (2.0 * (b / (e * tt)).sqrt().atan() + PI) / gap
            + e * tt.powf(1.5) * f.powf(1.5) * b.powf(2.5) * (2.0 * (1.0 / (e * f).sqrt()).atan() - PI) / gap
    };
    value.is_finite().then_some(value)
}

/// Edge CCDF from the closed forms. Requires `σ² = 0`, `α = 4`, an edge
/// query and an FFR scheme. A printed SFR kernel that is singular or
/// non-finite falls back to quadrature.
pub fn ccdf_closed_form(query: &CoverageQuery, variant: ClosedFormVariant, opts: &AnalyticOptions) -> Result<f64> {
    let p = &query.params;
    if !p.is_noiseless() {
        return Err(Error::ClosedFormPrecondition("closed forms need sigma2 = 0"));
    }
    if p.alpha() != 4.0 {
        return Err(Error::ClosedFormPrecondition("closed forms need alpha = 4"));
    }
    if query.class != Conditioning::Edge {
        return Err(Error::ClosedFormPrecondition("closed forms cover edge users only"));
    }
    if !(query.t > 0.0) {
        return Err(Error::ClosedFormPrecondition("threshold must be > 0"));
    }
    query.scheme.validate()?;
    let t = query.t;
    let value = match query.scheme {
        ReuseScheme::StrictFfr { delta, t_ffr } => {
            let xi = match variant {
                ClosedFormVariant::Derived => xi_ffr_alpha4(t, t_ffr, delta),
                ClosedFormVariant::AsPrinted => xi_ffr_alpha4_printed(t, t_ffr, delta),
            };
            let rho_f = rho_alpha4(t_ffr);
            let outage = degenerate_check(rho_f / (1.0 + rho_f))?;
            let covered = 1.0 / (1.0 + rho_alpha4(t) / f64::from(delta));
            (covered - 1.0 / (1.0 + 2.0 * xi)) / outage
        }
        ReuseScheme::Sfr { delta, beta, t_ffr } => {
            let eta = query.scheme.eta();
            let xi = match variant {
                ClosedFormVariant::Derived => xi_sfr_alpha4(t, t_ffr, beta, eta),
                ClosedFormVariant::AsPrinted => match xi_sfr_alpha4_printed(t, t_ffr, beta, eta) {
                    Some(xi) => xi,
                    None => xi_sfr(t, t_ffr, 4.0, beta, eta, &opts.quadrature)?,
                },
            };
            let rho_f = match opts.sfr_denominator {
                SfrDenominator::EtaWeighted => rho_alpha4(eta * t_ffr),
                SfrDenominator::Thinned => rho_alpha4(t_ffr) / f64::from(delta),
            };
            let outage = degenerate_check(rho_f / (1.0 + rho_f))?;
            let covered = 1.0 / (1.0 + rho_alpha4(eta * t / beta));
            (covered - 1.0 / (1.0 + 2.0 * xi)) / outage
        }
        _ => {
            return Err(Error::SchemeMismatch(format!(
                "closed forms exist for FFR schemes, got {}",
                query.scheme.kind()
            )))
        }
    };
    debug_assert!(matches!(query.scheme.kind(), SchemeKind::StrictFfr | SchemeKind::Sfr));
    Ok(value)
}

fn degenerate_check(probability: f64) -> Result<f64> {
    if probability < DEGENERATE_FLOOR {
        Err(Error::DegenerateRegime {
            probability,
            floor: DEGENERATE_FLOOR,
        })
    } else {
        Ok(probability)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::coverage::ccdf;
    use crate::analytic::kernels::xi_ffr;
    use crate::model::NetworkParams;
    use crate::quadrature::QuadratureSpec;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn derivative_matches_difference() {
        for t in [0.1, 1.0, 7.0] {
            let h = 1e-6 * t;
            let fd = (rho_alpha4(t + h) - rho_alpha4(t - h)) / (2.0 * h);
            assert!((fd - rho_alpha4_derivative(t)).abs() < 1e-7);
        }
    }

    #[test]
    fn derived_ffr_kernel_matches_quadrature() {
        for (t, f) in [(2.0, 1.0), (0.5, 1.26), (10.0, 1.26), (1.0, 1.0), (1.0 + 1e-8, 1.0)] {
            let q = xi_ffr(t, f, 4.0, 3, &spec()).unwrap();
            assert!((xi_ffr_alpha4(t, f, 3) - q).abs() < 1e-8, "{t} {f}");
        }
        assert!((xi_ffr_alpha4(1.0, 1.0, 3) - 0.499815595).abs() < 1e-8);
    }

    #[test]
    fn printed_limit_agrees_printed_generic_does_not() {
        assert!((xi_ffr_alpha4_printed(1.0, 1.0, 3) - xi_ffr_alpha4(1.0, 1.0, 3)).abs() < 1e-12);
        assert!((xi_ffr_alpha4_printed(2.0, 1.0, 3) - xi_ffr_alpha4(2.0, 1.0, 3)).abs() > 0.1);
    }

    #[test]
    fn derived_sfr_kernel_matches_quadrature() {
        for (t, f, b) in [(2.0, 1.26, 4.0), (1.26, 1.26, 4.0), (5.04, 1.26, 4.0), (0.3, 1.0, 15.0)] {
            let e = (2.0 + b) / 3.0;
            let q = xi_sfr(t, f, 4.0, b, e, &spec()).unwrap();
            assert!((xi_sfr_alpha4(t, f, b, e) - q).abs() < 1e-8);
        }
        assert!(xi_sfr_alpha4_printed(1.0, 1.0, 1.0, 1.0).is_none());
    }

    #[test]
    fn closed_form_matches_quadrature_path() {
        let p = NetworkParams::builder().no_noise().t_ffr(1.0).beta(4.0).build().unwrap();
        let opts = AnalyticOptions::default();
        for kind in [SchemeKind::StrictFfr, SchemeKind::Sfr] {
            let scheme = ReuseScheme::from_params(kind, &p);
            for t in [0.1, 1.0, 2.0, 4.0, 30.0] {
                let q = CoverageQuery::new(t, p, scheme, Conditioning::Edge);
                let a = ccdf_closed_form(&q, ClosedFormVariant::Derived, &opts).unwrap();
                let b = ccdf(&q, &opts).unwrap();
                assert!((a - b).abs() < 1e-7, "{kind} {t}: {a} vs {b}");
            }
        }
        let scheme = ReuseScheme::from_params(SchemeKind::StrictFfr, &p);
        let q = CoverageQuery::new(1.0, p, scheme, Conditioning::Edge);
        assert!((ccdf_closed_form(&q, ClosedFormVariant::Derived, &opts).unwrap() - 0.6648).abs() < 5e-5);
    }

    #[test]
    fn preconditions() {
        let opts = AnalyticOptions::default();
        let noisy = NetworkParams::builder().sigma2(1e-12).build().unwrap();
        let s = ReuseScheme::from_params(SchemeKind::StrictFfr, &noisy);
        let q = CoverageQuery::new(1.0, noisy, s, Conditioning::Edge);
        assert!(matches!(
            ccdf_closed_form(&q, ClosedFormVariant::Derived, &opts),
            Err(Error::ClosedFormPrecondition(_))
        ));
        let a3 = NetworkParams::builder().no_noise().alpha(3.0).build().unwrap();
        let q = CoverageQuery::new(1.0, a3, ReuseScheme::from_params(SchemeKind::StrictFfr, &a3), Conditioning::Edge);
        assert!(ccdf_closed_form(&q, ClosedFormVariant::Derived, &opts).is_err());
        let p = NetworkParams::builder().no_noise().build().unwrap();
        let q = CoverageQuery::new(1.0, p, ReuseScheme::from_params(SchemeKind::StrictFfr, &p), Conditioning::Interior);
        assert!(ccdf_closed_form(&q, ClosedFormVariant::Derived, &opts).is_err());
        let q = CoverageQuery::new(1.0, p, ReuseScheme::NoReuse, Conditioning::Edge);
        assert!(ccdf_closed_form(&q, ClosedFormVariant::Derived, &opts).is_err());
    }
}
