//! Per-cell sum rate as the number of edge sub-bands grows, T_FFR = 3 dB,
//! 48 sub-bands, with the two reuse baselines for scale.
//!
//! `cargo run --release --example sum_rate [trials]`

use ffreval::model::{NetworkParams, ReuseScheme, SchemeKind};
use ffreval::montecarlo::{sum_rate_sweep, InterferenceMode, SimConfig};

const N_BAND: u32 = 48;

fn main() -> ffreval::Result<()> {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50_000);
    let config = SimConfig::ppp(trials, 3);
    let counts = [2, 4, 8, 12, 16];
    let mode = InterferenceMode::EffectiveEta;

    for (kind, beta) in [(SchemeKind::StrictFfr, 1.0), (SchemeKind::Sfr, 2.0)] {
        let p = NetworkParams::builder().no_noise().beta(beta).t_ffr_db(3.0).build()?;
        let scheme = ReuseScheme::from_params(kind, &p);
        println!("{kind} (beta = {beta})");
        for (n, r) in counts.iter().zip(sum_rate_sweep(&config, &p, &scheme, N_BAND, &counts, mode)?) {
            let r = r?;
            let plan = r.plan.expect("FFR plans");
            println!(
                "  n_edge {n:2}  n_int {:2}  sum {:7.2}  (edge {:.3}, interior {:.3} nats)",
                plan.n_int, r.sum_rate, r.edge_rate, r.interior_rate
            );
        }
    }

    let p = NetworkParams::builder().no_noise().build()?;
    for scheme in [ReuseScheme::NoReuse, ReuseScheme::ReuseDelta { delta: 3 }] {
        let r = sum_rate_sweep(&config, &p, &scheme, N_BAND, &[0], mode)?.remove(0)?;
        println!("{}: sum {:.2}", scheme.kind(), r.sum_rate);
    }
    Ok(())
}
