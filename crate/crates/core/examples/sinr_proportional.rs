//! Edge sub-bands sized to the edge coverage shortfall, and the resulting sum
//! rate, over a T_FFR sweep.
//!
//! `cargo run --release --example sinr_proportional [trials]`

use ffreval::allocation::sinr_proportional;
use ffreval::analytic::AnalyticOptions;
use ffreval::model::{db_to_linear, NetworkParams, ReuseScheme, SchemeKind};
use ffreval::montecarlo::{sum_rate_proportional_sweep, InterferenceMode, SimConfig};

fn main() -> ffreval::Result<()> {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50_000);
    let opts = AnalyticOptions::default();
    let params = NetworkParams::builder().no_noise().beta(2.0).t_ffr(1.0).build()?;
    let grid: Vec<f64> = (-5..=10).map(f64::from).collect();
    let thresholds: Vec<f64> = grid.iter().copied().map(db_to_linear).collect();
    let config = SimConfig::ppp(trials, 5);

    let mut sums = Vec::new();
    for kind in [SchemeKind::StrictFfr, SchemeKind::Sfr] {
        sums.push(sum_rate_proportional_sweep(&config, &params, kind, 48, &thresholds, InterferenceMode::EffectiveEta, &opts)?);
    }

    println!("{:>8} {:>14} {:>10} {:>14} {:>10}", "Tffr dB", "strict n_edge", "sum", "sfr n_edge", "sum");
    for (i, &t) in thresholds.iter().enumerate() {
        let p = params.to_builder().t_ffr(t).build()?;
        let plan = |kind| sinr_proportional(&p, &ReuseScheme::from_params(kind, &p), 48, &opts);
        let (s, f) = (plan(SchemeKind::StrictFfr)?, plan(SchemeKind::Sfr)?);
        let mark = |c: bool| if c { "*" } else { " " };
        println!(
            "{:8.1} {:>13}{} {:10.2} {:>13}{} {:10.2}",
            grid[i],
            s.n_edge,
            mark(s.clamped),
            sums[0][i].sum_rate,
            f.n_edge,
            mark(f.clamped),
            sums[1][i].sum_rate
        );
    }
    println!("* clamped to n_band / delta");
    Ok(())
}
