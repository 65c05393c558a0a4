//! Analytic coverage and rate under the Poisson base-station model.

pub mod closed_form;
pub mod coverage;
pub mod kernels;
pub mod rate;

pub use closed_form::{ccdf_closed_form, ClosedFormVariant};
pub use coverage::{
    analytic_curve, ccdf, ccdf_baseline, ccdf_ffr_edge, ccdf_ffr_interior, ccdf_sfr_edge, ccdf_sfr_interior,
    edge_probability, AnalyticOptions, Conditioning, CoverageQuery, SfrDenominator, DEGENERATE_FLOOR,
};
pub use kernels::{pc_general, rho, rho_alpha4, xi_ffr, xi_sfr};
pub use rate::{
    rate_analytic, rate_ffr_edge, rate_generic_mc_consistency, rate_sfr_edge, RateConsistency, RateEstimate,
    RateQuery,
};
