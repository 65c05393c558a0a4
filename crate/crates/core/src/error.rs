use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {value:e}, error {error:e})")]
    QuadratureNonConvergence {
        subdivisions: usize,
        value: f64,
        error: f64,
    },

    #[error("integrand returned a non-finite value at x = {at}")]
    QuadratureNonFinite { at: f64 },

    /// The conditioning event of an edge-user CCDF has (numerically) zero
    /// probability, e.g. T_FFR so low that no user is ever classified as edge.
    #[error("degenerate regime: edge-class probability {probability:e} is below {floor:e}")]
    DegenerateRegime { probability: f64, floor: f64 },

    /// A downlink with no active interferers and no noise has unbounded SINR.
    #[error("degenerate sample: no active interferers and zero noise power")]
    DegenerateSample,

    #[error("deployment has no base stations")]
    EmptyDeployment,

    #[error("no outcomes left after conditioning on {0} users")]
    EmptyConditioning(&'static str),

    #[error("closed form requires {0}")]
    ClosedFormPrecondition(&'static str),

    #[error("scheme mismatch: {0}")]
    SchemeMismatch(String),

    #[error("infeasible allocation: {0}")]
    InfeasibleAllocation(String),

    #[error("{path}:{line}: {reason}")]
    DeploymentFile {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("{path}:{line}: base station ({x}, {y}) lies outside the window")]
    OutsideWindow {
        path: PathBuf,
        line: usize,
        x: f64,
        y: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
