use std::path::PathBuf;

use crate::error::{invalid, Result};
use crate::model::NetworkParams;

pub const DEFAULT_WINDOW_RADIUS_FACTOR: f64 = 40.0;
/// The PPP window always holds at least this many base stations on average.
pub const MIN_EXPECTED_SITES: f64 = 200.0;

/// Where base stations come from.
#[derive(Debug, Clone, PartialEq)]
pub enum DeploymentSource {
    /// A fresh Poisson realisation per trial, centred on the typical user.
    Ppp,
    /// `count` sites on a square lattice covering `area_m2`.
    Grid { count: usize, area_m2: f64 },
    /// Sites read from a CSV file.
    File(PathBuf),
}

impl DeploymentSource {
    /// 25 sites over 10 km², a 5×5 lattice at ≈632.5 m spacing.
    pub fn grid_preset() -> Self {
        DeploymentSource::Grid {
            count: 25,
            area_m2: 10.0e6,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub trials: usize,
    pub seed: u64,
    /// PPP window radius in units of the mean nearest-neighbour distance
    /// `1 / (2√λ)`.
    pub window_radius_factor: f64,
    pub source: DeploymentSource,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            trials: 100_000,
            seed: 7,
            window_radius_factor: DEFAULT_WINDOW_RADIUS_FACTOR,
            source: DeploymentSource::Ppp,
        }
    }
}

impl SimConfig {
    pub fn ppp(trials: usize, seed: u64) -> Self {
        SimConfig {
            trials,
            seed,
            ..SimConfig::default()
        }
    }

    pub fn grid_preset(trials: usize, seed: u64) -> Self {
        SimConfig {
            source: DeploymentSource::grid_preset(),
            ..SimConfig::ppp(trials, seed)
        }
    }

    pub fn with_source(self, source: DeploymentSource) -> Self {
        SimConfig { source, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(invalid("trials", "must be >= 1"));
        }
        if !(self.window_radius_factor >= 10.0) || !self.window_radius_factor.is_finite() {
            return Err(invalid("window_radius_factor", "must be >= 10"));
        }
        if let DeploymentSource::Grid { count, area_m2 } = self.source {
            if count < 2 {
                return Err(invalid("grid_count", "must be >= 2"));
            }
            if !(area_m2 > 0.0) || !area_m2.is_finite() {
                return Err(invalid("area", "must be > 0"));
            }
        }
        Ok(())
    }

    /// Radius of the PPP disc around the typical user, meters.
    pub fn window_radius(&self, params: &NetworkParams) -> f64 {
        let lambda = params.lambda();
        let by_factor = self.window_radius_factor / (2.0 * lambda.sqrt());
        let by_count = (MIN_EXPECTED_SITES / (std::f64::consts::PI * lambda)).sqrt();
        by_factor.max(by_count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn radius_holds_enough_sites() {
        let p = NetworkParams::default();
        let c = SimConfig::default();
        let r = c.window_radius(&p);
        let expected = PI * p.lambda() * r * r;
        assert!((expected - 400.0 * PI).abs() < 1e-6);
        let small = SimConfig {
            window_radius_factor: 10.0,
            ..c
        };
        assert!(PI * p.lambda() * small.window_radius(&p).powi(2) >= MIN_EXPECTED_SITES - 1e-9);
    }

    #[test]
    fn validation() {
        assert!(SimConfig::ppp(0, 1).validate().is_err());
        let c = SimConfig {
            window_radius_factor: 5.0,
            ..SimConfig::default()
        };
        assert!(c.validate().is_err());
        assert!(SimConfig::grid_preset(10, 1).validate().is_ok());
    }
}
