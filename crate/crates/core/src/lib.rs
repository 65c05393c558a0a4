//! Coverage, rate and sub-band planning for Strict FFR and SFR cellular
//! downlinks with base stations placed as a Poisson point process.
//!
//! * [`analytic`] evaluates edge and interior SINR CCDFs and average rates by
//!   quadrature, with closed forms for the noiseless `α = 4` case.
//! * [`montecarlo`] simulates the same downlinks and serves as the oracle.
//! * [`allocation`] partitions sub-bands between interior and edge users.
//! * [`cli`] backs the `ffreval` binary.

// `!(x > 0.0)` rejects NaN along with the bad range.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod allocation;
pub mod analytic;
pub mod cli;
pub mod curve;
mod error;
pub mod model;
pub mod montecarlo;
pub mod quadrature;

pub use error::{Error, Result};
pub use model::{NetworkParams, ReuseScheme, SchemeKind, UserClass};
