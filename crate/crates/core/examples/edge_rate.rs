//! Average edge-user rate against T_FFR, analytic and simulated.
//!
//! `cargo run --release --example edge_rate [trials]`

use ffreval::analytic::{rate_generic_mc_consistency, AnalyticOptions, Conditioning, RateQuery};
use ffreval::model::{NetworkParams, ReuseScheme, SchemeKind};
use ffreval::montecarlo::SimConfig;

fn main() -> ffreval::Result<()> {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50_000);
    let opts = AnalyticOptions::default();
    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "Tffr dB", "scheme", "analytic", "mc", "±3se");
    for db in [-10.0, -5.0, 0.0, 5.0, 10.0] {
        for (kind, beta) in [(SchemeKind::StrictFfr, 1.0), (SchemeKind::Sfr, 4.0)] {
            let p = NetworkParams::builder().no_noise().beta(beta).t_ffr_db(db).build()?;
            let q = RateQuery::new(p, ReuseScheme::from_params(kind, &p), Conditioning::Edge);
            let r = rate_generic_mc_consistency(&q, &SimConfig::ppp(trials, 1), &opts)?;
            println!(
                "{db:8.1} {:>10} {:10.4} {:10.4} {:10.4}{}",
                kind.name(),
                r.analytic.nats,
                r.mc,
                r.half_width,
                if r.pass { "" } else { "  outside" }
            );
        }
    }
    Ok(())
}
