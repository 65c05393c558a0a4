//! Simulation over base stations read from a CSV file (`id,x_m,y_m`). With
//! no path argument a hexagonal layout is written to a temporary file first.
//!
//! `cargo run --release --example deployment_file [sites.csv]`

use std::fmt::Write as _;
use std::path::PathBuf;

use ffreval::analytic::Conditioning;
use ffreval::curve::linear_grid_from_db;
use ffreval::model::{linear_to_db, NetworkParams, ReuseScheme, SchemeKind};
use ffreval::montecarlo::{edge_fraction, estimate_ccdf, load_deployment, simulate, DeploymentSource, InterferenceMode, SimConfig};

fn hexagonal(rings: i32, spacing: f64) -> String {
    let mut csv = String::from("# hexagonal layout\nid,x_m,y_m\n");
    let mut id = 0;
    for q in -rings..=rings {
        for r in (-rings).max(-q - rings)..=rings.min(-q + rings) {
            let x = spacing * (f64::from(q) + f64::from(r) / 2.0);
            let y = spacing * f64::from(r) * 3f64.sqrt() / 2.0;
            let _ = writeln!(csv, "{id},{x:.3},{y:.3}");
            id += 1;
        }
    }
    csv
}

fn main() -> ffreval::Result<()> {
    let path = match std::env::args().nth(1) {
        Some(p) => PathBuf::from(p),
        None => {
            let p = std::env::temp_dir().join("ffreval_hex.csv");
            std::fs::write(&p, hexagonal(3, 500.0)).expect("write layout");
            p
        }
    };
    let sites = load_deployment(&path, None)?;
    println!("{} sites from {}", sites.positions().len(), path.display());

    let p = NetworkParams::builder().no_noise().t_ffr_db(1.0).build()?;
    let scheme = ReuseScheme::from_params(SchemeKind::StrictFfr, &p);
    let config = SimConfig::ppp(20_000, 2).with_source(DeploymentSource::File(path));
    let outcomes = simulate(&config, &p, &scheme, InterferenceMode::EffectiveEta)?;

    let f = edge_fraction(&outcomes)?;
    println!("edge fraction {:.4} ± {:.4}", f.value, f.half_width);
    let grid = linear_grid_from_db(-10.0, 20.0, 5.0)?;
    for pt in estimate_ccdf(&outcomes, &grid, Conditioning::Edge)?.points {
        println!("  {:5.1} dB  {:.4}", linear_to_db(pt.t), pt.ccdf);
    }
    Ok(())
}
