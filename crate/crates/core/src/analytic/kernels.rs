//! Interference kernels and the nearest-BS de-conditioning integral.
//!
//! Every coverage expression in [`super::coverage`] is a ratio of terms of the
//! form
//!
//! ```text
//! V(a, s) = πλ ∫₀^∞ exp(-πλ v a - μ s (σ²/P) v^{α/2}) dv
//! ```
//!
//! where `a = 1 + (interference kernel)` and `s` is the SINR threshold seen by
//! the noise term. With `σ² = 0` the integral collapses to `1/a`.

use crate::error::{invalid, Result};
use crate::model::NetworkParams;
use crate::quadrature::{integrate_decay, QuadratureSpec};

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 2.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(invalid("alpha", format!("must be > 2, got {alpha}")))
    }
}

fn check_threshold(name: &'static str, t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("must be finite and >= 0, got {t}")))
    }
}

/// `ρ(T, α) = T^{2/α} ∫_{T^{-2/α}}^∞ du / (1 + u^{α/2})`.
pub fn rho(t: f64, alpha: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_alpha(alpha)?;
    check_threshold("t", t)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    let scale = t.powf(2.0 / alpha);
    let lower = 1.0 / scale;
    let half = alpha / 2.0;
    let r = integrate_decay(|u: f64| 1.0 / (1.0 + u.powf(half)), lower, spec)?;
    Ok(scale * r.value)
}

/// `ρ(T, 4) = √T (π/2 - arctan(1/√T)) = √T arctan(√T)`.
pub fn rho_alpha4(t: f64) -> f64 {
    let s = t.sqrt();
    s * s.atan()
}

/// Joint kernel of the pre-assignment band (threshold `a`, every BS active)
/// and a reuse-Δ band (threshold `b`, each BS active with probability 1/Δ):
///
/// `∫₁^∞ [1 - 1/(1+a x^-α) (1 - (1 - 1/(1+b x^-α))/Δ)] x dx`.
pub fn xi_thinned(a: f64, b: f64, alpha: f64, delta: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_alpha(alpha)?;
    let thin = 1.0 / delta;
    let integrand = |x: f64| {
        let y = x.powf(-alpha);
        let ay = a * y;
        let by = b * y;
        // 1 - A(1 - (1-B)/Δ) = (1-A) + A(1-B)/Δ, written without cancellation.
        let term = ay / (1.0 + ay) + thin * by / ((1.0 + ay) * (1.0 + by));
        term * x
    };
    if a == 0.0 && b == 0.0 {
        return Ok(0.0);
    }
    Ok(integrate_decay(integrand, 1.0, spec)?.value)
}

/// Joint kernel with both bands fully loaded:
/// `∫₁^∞ [1 - 1/((1+a x^-α)(1+b x^-α))] x dx`.
pub fn xi_product(a: f64, b: f64, alpha: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_alpha(alpha)?;
    if a == 0.0 && b == 0.0 {
        return Ok(0.0);
    }
    let integrand = |x: f64| {
        let y = x.powf(-alpha);
        let ay = a * y;
        let by = b * y;
        (ay + by + ay * by) / ((1.0 + ay) * (1.0 + by)) * x
    };
    Ok(integrate_decay(integrand, 1.0, spec)?.value)
}

/// Strict-FFR edge kernel `ξ(T, T_FFR, α, Δ)`.
pub fn xi_ffr(t: f64, t_ffr: f64, alpha: f64, delta: u32, spec: &QuadratureSpec) -> Result<f64> {
    check_threshold("t", t)?;
    check_threshold("t_ffr", t_ffr)?;
    if delta < 1 {
        return Err(invalid("delta", "must be >= 1"));
    }
    xi_thinned(t_ffr, t, alpha, f64::from(delta), spec)
}

/// SFR edge kernel `ξ(T, T_FFR, α, Δ, η, β)` with effective thresholds
/// `η T_FFR` (pre-assignment) and `η T / β` (boosted edge band).
pub fn xi_sfr(t: f64, t_ffr: f64, alpha: f64, beta: f64, eta: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_threshold("t", t)?;
    check_threshold("t_ffr", t_ffr)?;
    if !(beta >= 1.0) {
        return Err(invalid("beta", "must be >= 1"));
    }
    xi_product(eta * t_ffr, eta * t / beta, alpha, spec)
}

/// `V(a, s)`: nearest-BS de-conditioning with interference exponent `a` and
/// noise threshold `s`.
pub fn v_integral(params: &NetworkParams, a: f64, noise_threshold: f64, spec: &QuadratureSpec) -> Result<f64> {
    if params.is_noiseless() || noise_threshold == 0.0 {
        return Ok(1.0 / a);
    }
    let pi_lambda = std::f64::consts::PI * params.lambda();
    let half = params.alpha() / 2.0;
    let c = params.mu() * noise_threshold * params.sigma2() / params.power() * pi_lambda.powf(-half);
    // Substituting u = a·πλ·v puts the exponential scale at 1.
    let r = integrate_decay(|u: f64| (-u - c * (u / a).powf(half)).exp(), 0.0, spec)?;
    Ok(r.value / a)
}

/// `1 - V(a, s)`, exact (no cancellation) when the noise term vanishes.
pub fn one_minus_v_integral(params: &NetworkParams, a: f64, noise_threshold: f64, spec: &QuadratureSpec) -> Result<f64> {
    if params.is_noiseless() || noise_threshold == 0.0 {
        return Ok((a - 1.0) / a);
    }
    Ok(1.0 - v_integral(params, a, noise_threshold, spec)?)
}

/// Baseline coverage `p_c(T, λ, α, Δ)` of a user whose band is reused by a
/// fraction `1/Δ` of the other base stations.
pub fn pc_general(t: f64, params: &NetworkParams, delta_bands: u32, spec: &QuadratureSpec) -> Result<f64> {
    if delta_bands < 1 {
        return Err(invalid("delta_bands", "must be >= 1"));
    }
    let rho = rho(t, params.alpha(), spec)?;
    v_integral(params, 1.0 + rho / f64::from(delta_bands), t, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    fn noiseless() -> NetworkParams {
        NetworkParams::builder().no_noise().build().unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(0.0, 4.0, &spec()).unwrap(), 0.0);
        assert!(rho(1e-12, 4.0, &spec()).unwrap() < 1e-11);
        assert!((rho(1.0, 4.0, &spec()).unwrap() - PI / 4.0).abs() < 1e-9);
        let rho2 = rho(2.0, 4.0, &spec()).unwrap();
        assert!((rho2 - 2f64.sqrt() * (PI / 2.0 - (1.0 / 2f64.sqrt()).atan())).abs() < 1e-9);
        assert!((rho2 - 1.35103).abs() < 1e-5);
    }

    #[test]
    fn rho_matches_alpha4_closed_form() {
        for db in -20..=30 {
            let t = crate::model::db_to_linear(f64::from(db));
            let q = rho(t, 4.0, &spec()).unwrap();
            let c = rho_alpha4(t);
            assert!((q - c).abs() <= 1e-8 * c, "T = {db} dB: {q} vs {c}");
        }
    }

    /// ρ equals twice the Δ→∞ reduction of the joint kernel.
    #[test]
    fn rho_is_twice_the_single_band_kernel() {
        for alpha in [2.5, 3.0, 4.0, 5.5] {
            for t in [0.1, 1.0, 7.0] {
                let direct = rho(t, alpha, &spec()).unwrap();
                let via_kernel = 2.0 * xi_thinned(t, 0.0, alpha, 1.0, &spec()).unwrap();
                assert!((direct - via_kernel).abs() < 1e-7 * direct, "α={alpha} T={t}: {direct} vs {via_kernel}");
            }
        }
    }

    #[test]
    fn pc_noiseless_collapse() {
        let p = noiseless();
        assert!((pc_general(1e-12, &p, 1, &spec()).unwrap() - 1.0).abs() < 1e-10);
        let pc1 = pc_general(1.0, &p, 1, &spec()).unwrap();
        assert!((pc1 - 1.0 / (1.0 + PI / 4.0)).abs() < 1e-10);
        assert!((pc1 - 0.56010).abs() < 1e-5);
        let pc3 = pc_general(1.0, &p, 3, &spec()).unwrap();
        assert!((pc3 - 1.0 / (1.0 + PI / 12.0)).abs() < 1e-10);
        assert!((pc3 - 0.79252).abs() < 1e-5);
    }

    #[test]
    fn v_integral_quadrature_path_agrees_with_collapse() {
        // A vanishing (but non-zero) noise forces the quadrature path.
        let p = NetworkParams::builder().sigma2(1e-300).build().unwrap();
        for a in [1.0, 1.7, 25.0] {
            let v = v_integral(&p, a, 1.0, &spec()).unwrap();
            assert!((v - 1.0 / a).abs() < 1e-9, "a = {a}: {v}");
        }
    }

    #[test]
    fn noise_reduces_coverage() {
        let quiet = noiseless();
        let noisy = quiet.to_builder().sigma2(1e-9).build().unwrap();
        let q = pc_general(1.0, &quiet, 1, &spec()).unwrap();
        let n = pc_general(1.0, &noisy, 1, &spec()).unwrap();
        assert!(n < q && n > 0.0);
    }

    /// Brute-force oracle for the noisy v-integral: midpoint rule on a
    /// truncated range.
    #[test]
    fn v_integral_matches_midpoint_oracle() {
        let p = NetworkParams::builder()
            .lambda(1e-5)
            .sigma2(1e-10)
            .power(1.0)
            .build()
            .unwrap();
        let a = 1.0 + PI / 4.0;
        let s = 2.0;
        let pl = PI * p.lambda();
        let f = |v: f64| pl * (-pl * v * a - p.mu() * s * p.sigma2() / p.power() * v * v).exp();
        let n = 400_000;
        let hi = 40.0 / pl;
        let h = hi / n as f64;
        let oracle: f64 = (0..n).map(|i| f((i as f64 + 0.5) * h) * h).sum();
        let v = v_integral(&p, a, s, &spec()).unwrap();
        assert!((v - oracle).abs() < 1e-7, "{v} vs {oracle}");
        assert!(v < 1.0 / a);
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi_ffr(0.0, 0.0, 4.0, 3, &spec()).unwrap(), 0.0);
        assert!(xi_ffr(1e-14, 1e-14, 4.0, 3, &spec()).unwrap() < 1e-12);
        assert!((xi_ffr(1.0, 1.0, 4.0, 3, &spec()).unwrap() - 0.49982).abs() < 1e-5);
        assert!(xi_sfr(1e-14, 1e-14, 4.0, 4.0, 2.0, &spec()).unwrap() < 1e-12);
    }

    #[test]
    fn xi_ffr_large_delta_reduces_to_half_rho() {
        let t_ffr = 1.3;
        let xi = xi_ffr(2.0, t_ffr, 4.0, 1_000_000, &spec()).unwrap();
        let half_rho = rho(t_ffr, 4.0, &spec()).unwrap() / 2.0;
        assert!((xi - half_rho).abs() < 1e-5, "{xi} vs {half_rho}");
    }

    #[test]
    fn xi_sfr_at_unit_beta_is_the_full_reuse_kernel() {
        for (t, t_ffr) in [(0.3, 1.0), (1.0, 1.0), (5.0, 1.26)] {
            let sfr = xi_sfr(t, t_ffr, 4.0, 1.0, 1.0, &spec()).unwrap();
            let ffr_delta1 = xi_ffr(t, t_ffr, 4.0, 1, &spec()).unwrap();
            assert!((sfr - ffr_delta1).abs() < 1e-9);
        }
    }

    #[test]
    fn kernels_reject_bad_inputs() {
        assert!(rho(1.0, 2.0, &spec()).is_err());
        assert!(rho(-1.0, 4.0, &spec()).is_err());
        assert!(xi_ffr(1.0, 1.0, 4.0, 0, &spec()).is_err());
        assert!(xi_sfr(1.0, 1.0, 4.0, 0.5, 1.0, &spec()).is_err());
        assert!(pc_general(1.0, &noiseless(), 0, &spec()).is_err());
    }
}
