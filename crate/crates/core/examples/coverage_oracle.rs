//! Analytic edge and interior CCDFs against the Monte-Carlo oracle for
//! Strict FFR and SFR (β = 4), no noise, Δ = 3, T_FFR = 1 dB, α = 4.
//!
//! Run with `cargo run --release --example coverage_oracle [trials]`.

use ffreval::analytic::{analytic_curve, AnalyticOptions, Conditioning, CoverageQuery};
use ffreval::curve::linear_grid_from_db;
use ffreval::model::{linear_to_db, NetworkParams, ReuseScheme, SchemeKind};
use ffreval::montecarlo::{estimate_ccdf, simulate, InterferenceMode, SimConfig};

fn main() -> ffreval::Result<()> {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let params = NetworkParams::builder().no_noise().delta(3).beta(4.0).t_ffr_db(1.0).build()?;
    let config = SimConfig::ppp(trials, 7);
    let grid = linear_grid_from_db(-10.0, 20.0, 1.0)?;
    let opts = AnalyticOptions::default();

    for kind in [SchemeKind::StrictFfr, SchemeKind::Sfr] {
        let scheme = ReuseScheme::from_params(kind, &params);
        let outcomes = simulate(&config, &params, &scheme, InterferenceMode::EffectiveEta)?;
        for class in [Conditioning::Edge, Conditioning::Interior] {
            let analytic = analytic_curve(&CoverageQuery::new(1.0, params, scheme, class), &grid, &opts)?;
            let mc = estimate_ccdf(&outcomes, &grid, class)?;
            let mut worst: f64 = 0.0;
            let mut misses = 0;
            for (a, m) in analytic.points.iter().zip(&mc.points) {
                let gap = (a.ccdf - m.ccdf).abs();
                let hw = m.half_width.unwrap_or(0.0);
                if gap > hw {
                    misses += 1;
                    println!("  miss at {:5.1} dB: analytic {:.5} mc {:.5} ± {:.5}", linear_to_db(a.t), a.ccdf, m.ccdf, hw);
                }
                worst = worst.max(gap / hw.max(1e-12));
            }
            println!(
                "{kind:>10} {:>8}: {} points, {misses} outside 3 SE, worst gap {:.2} half-widths",
                class.name(),
                grid.len(),
                worst
            );
        }
    }
    Ok(())
}
