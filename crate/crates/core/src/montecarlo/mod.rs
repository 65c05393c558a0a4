//! Monte-Carlo simulation of the downlink, used as the oracle for the
//! analytic expressions and for sum-rate experiments.

pub mod config;
pub mod deployment;
pub mod engine;
pub mod estimate;
pub mod sumrate;

pub use config::{DeploymentSource, SimConfig};
pub use deployment::{grid_lattice, load_deployment, sample_deployment};
pub use engine::{
    simulate, simulate_baseline, simulate_sfr, simulate_strict_ffr, simulate_sweep, InterferenceMode, SweepTrial,
    TrialOutcome,
};
pub use estimate::{binomial_half_width, edge_fraction, estimate_ccdf, estimate_rate, Proportion, RateSample};
pub use sumrate::{sum_rate_experiment, sum_rate_from_outcomes, sum_rate_proportional_sweep, sum_rate_sweep, SumRate};
