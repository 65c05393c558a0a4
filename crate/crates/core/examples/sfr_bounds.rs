//! SFR edge coverage as β sweeps from 1 towards infinity, next to the two
//! reference curves it moves between.
//!
//! `cargo run --release --example sfr_bounds`

use ffreval::analytic::{ccdf, pc_general, AnalyticOptions, Conditioning, CoverageQuery};
use ffreval::model::{db_to_linear, NetworkParams, ReuseScheme, SchemeKind};
use ffreval::quadrature::QuadratureSpec;

fn main() -> ffreval::Result<()> {
    let opts = AnalyticOptions::default();
    let spec = QuadratureSpec::default();
    let betas = [1.0, 2.0, 4.0, 20.0, 100.0, 1e4];
    let base = NetworkParams::builder().no_noise().t_ffr_db(1.0).build()?;

    print!("{:>6}", "T dB");
    for b in betas {
        print!(" {:>9}", format!("b={b}"));
    }
    println!(" {:>9} {:>9}", "strict", "reuse-3");

    for db in (-10..=20).step_by(2) {
        let t = db_to_linear(f64::from(db));
        print!("{db:6}");
        for beta in betas {
            let p = base.to_builder().beta(beta).build()?;
            let q = CoverageQuery::new(t, p, ReuseScheme::from_params(SchemeKind::Sfr, &p), Conditioning::Edge);
            print!(" {:9.5}", ccdf(&q, &opts)?);
        }
        let strict = CoverageQuery::new(t, base, ReuseScheme::from_params(SchemeKind::StrictFfr, &base), Conditioning::Edge);
        println!(" {:9.5} {:9.5}", ccdf(&strict, &opts)?, pc_general(t, &base, 3, &spec)?);
    }
    Ok(())
}
