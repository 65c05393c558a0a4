//! Edge coverage on a regular 25-site grid against the Poisson analysis. The
//! grid keeps interferers at arm's length, so its curve sits above.
//!
//! `cargo run --release --example grid_vs_ppp [trials]`

use ffreval::analytic::{analytic_curve, AnalyticOptions, Conditioning, CoverageQuery};
use ffreval::curve::linear_grid_from_db;
use ffreval::model::{linear_to_db, NetworkParams, ReuseScheme, SchemeKind, GRID_PRESET_LAMBDA};
use ffreval::montecarlo::{estimate_ccdf, simulate, InterferenceMode, SimConfig};

fn main() -> ffreval::Result<()> {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50_000);
    let grid = linear_grid_from_db(-10.0, 20.0, 2.0)?;
    let config = SimConfig::grid_preset(trials, 9);

    for (kind, beta) in [(SchemeKind::StrictFfr, 1.0), (SchemeKind::Sfr, 4.0)] {
        let p = NetworkParams::builder().no_noise().lambda(GRID_PRESET_LAMBDA).beta(beta).t_ffr_db(1.0).build()?;
        let scheme = ReuseScheme::from_params(kind, &p);
        let lattice = estimate_ccdf(&simulate(&config, &p, &scheme, InterferenceMode::EffectiveEta)?, &grid, Conditioning::Edge)?;
        let ppp = analytic_curve(&CoverageQuery::new(1.0, p, scheme, Conditioning::Edge), &grid, &AnalyticOptions::default())?;
        println!("{kind}: T dB, grid, ppp");
        for (g, a) in lattice.points.iter().zip(&ppp.points) {
            println!("  {:6.1} {:.4} {:.4}", linear_to_db(a.t), g.ccdf, a.ccdf);
        }
    }
    Ok(())
}
