//! Closed-form α = 4 edge coverage against quadrature, in both the derived
//! form and the form as originally printed.
//!
//! `cargo run --release --example closed_form`

use ffreval::analytic::{ccdf, ccdf_closed_form, AnalyticOptions, ClosedFormVariant, Conditioning, CoverageQuery};
use ffreval::curve::linear_grid_from_db;
use ffreval::model::{linear_to_db, NetworkParams, ReuseScheme, SchemeKind};

fn main() -> ffreval::Result<()> {
    let opts = AnalyticOptions::default();
    let grid = linear_grid_from_db(-10.0, 20.0, 2.5)?;

    for (kind, beta) in [(SchemeKind::StrictFfr, 1.0), (SchemeKind::Sfr, 4.0)] {
        let params = NetworkParams::builder().no_noise().beta(beta).t_ffr_db(1.0).build()?;
        let scheme = ReuseScheme::from_params(kind, &params);
        println!("{kind} (beta = {beta})");
        println!("{:>7} {:>11} {:>11} {:>11}", "T dB", "quadrature", "derived", "printed");
        for &t in &grid {
            let q = CoverageQuery::new(t, params, scheme, Conditioning::Edge);
            let reference = ccdf(&q, &opts)?;
            let derived = ccdf_closed_form(&q, ClosedFormVariant::Derived, &opts)?;
            let printed = ccdf_closed_form(&q, ClosedFormVariant::AsPrinted, &opts)?;
            println!("{:7.1} {reference:11.7} {derived:11.7} {printed:11.4}", linear_to_db(t));
        }
        println!();
    }
    // The printed forms are not CCDFs: values drift outside [0, 1].
    Ok(())
}
