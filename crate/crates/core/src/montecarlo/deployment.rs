//! Base-station layouts: Poisson, square lattice, or read from CSV.

use std::f64::consts::PI;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};

use super::config::{DeploymentSource, SimConfig};
use crate::error::{invalid, Error, Result};
use crate::model::{Deployment, DeploymentKind, NetworkParams, Point, Window};

/// Stream reserved for drawing whole deployments, apart from per-trial streams.
const DEPLOYMENT_STREAM: u64 = u64::MAX;

/// Materialises the configured deployment. PPP draws `Poisson(λ πR²)` points
/// uniformly in a disc of radius R about the origin.
pub fn sample_deployment(config: &SimConfig, params: &NetworkParams) -> Result<Deployment> {
    config.validate()?;
    match &config.source {
        DeploymentSource::Ppp => {
            let radius = config.window_radius(params);
            let mean = params.lambda() * PI * radius * radius;
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(DEPLOYMENT_STREAM);
            let n = if mean > 0.0 {
                Poisson::new(mean)
                    .map_err(|e| invalid("lambda", e.to_string()))?
                    .sample(&mut rng) as usize
            } else {
                0
            };
            let positions = (0..n)
                .map(|_| {
                    let r = radius * rng.random::<f64>().sqrt();
                    let theta = 2.0 * PI * rng.random::<f64>();
                    Point::new(r * theta.cos(), r * theta.sin())
                })
                .collect();
            Deployment::new(positions, Window::centered_square(radius), DeploymentKind::Ppp)
        }
        DeploymentSource::Grid { count, area_m2 } => grid_lattice(*count, *area_m2),
        DeploymentSource::File(path) => load_deployment(path, None),
    }
}

/// `count` sites on a lattice over a square of area `area_m2` centred on the
/// origin. Non-square counts fill a `cols × rows` lattice row by row.
pub fn grid_lattice(count: usize, area_m2: f64) -> Result<Deployment> {
    if count == 0 {
        return Err(Error::EmptyDeployment);
    }
    if !(area_m2 > 0.0) || !area_m2.is_finite() {
        return Err(invalid("area", "must be > 0"));
    }
    let side = area_m2.sqrt();
    let cols = (count as f64).sqrt().ceil() as usize;
    let rows = count.div_ceil(cols);
    let dx = side / cols as f64;
    let dy = side / rows as f64;
    let half = side / 2.0;
    let positions = (0..count)
        .map(|i| {
            let (r, c) = (i / cols, i % cols);
            Point::new(-half + (c as f64 + 0.5) * dx, -half + (r as f64 + 0.5) * dy)
        })
        .collect();
    Deployment::new(positions, Window::centered_square(half), DeploymentKind::Grid)
}

/// Reads `id,x_m,y_m` rows; lines starting with `#` are ignored. Without an
/// explicit window the bounding box of the sites is used.
pub fn load_deployment(path: &Path, window: Option<Window>) -> Result<Deployment> {
    let file_err = |line: usize, reason: String| Error::DeploymentFile {
        path: path.to_path_buf(),
        line,
        reason,
    };
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            other => file_err(0, format!("{other:?}")),
        })?;
    let header_line = reader.position().line();
    let headers = reader.headers().map_err(|e| file_err(header_line as usize, e.to_string()))?.clone();
    let names: Vec<&str> = headers.iter().collect();
    if names != ["id", "x_m", "y_m"] {
        return Err(file_err(1, format!("expected header `id,x_m,y_m`, found `{}`", names.join(","))));
    }

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            file_err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let coord = |i: usize, name: &str| -> Result<f64> {
            let v: f64 = record[i]
                .parse()
                .map_err(|_| file_err(line, format!("bad {name} `{}`", &record[i])))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(file_err(line, format!("{name} must be finite")))
            }
        };
        let p = Point::new(coord(1, "x_m")?, coord(2, "y_m")?);
        rows.push((line, p));
    }

    let positions: Vec<Point> = rows.iter().map(|&(_, p)| p).collect();
    let window = match window {
        Some(w) => {
            if let Some(&(line, p)) = rows.iter().find(|(_, p)| !w.contains(p)) {
                return Err(Error::OutsideWindow {
                    path: path.to_path_buf(),
                    line,
                    x: p.x,
                    y: p.y,
                });
            }
            w
        }
        None => Window::bounding(&positions).ok_or(Error::EmptyDeployment)?,
    };
    Deployment::new(positions, window, DeploymentKind::File)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn preset_grid_is_five_by_five() {
        let d = grid_lattice(25, 10.0e6).unwrap();
        assert_eq!(d.len(), 25);
        let spacing = (10.0e6f64 / 25.0).sqrt();
        let p = d.positions();
        assert!((p[1].x - p[0].x - spacing).abs() < 1e-9);
        assert!((p[5].y - p[0].y - spacing).abs() < 1e-9);
        assert!((spacing - 632.455).abs() < 1e-3);
        // The centre site sits on the window centre.
        assert!(p[12].x.abs() < 1e-9 && p[12].y.abs() < 1e-9);
    }

    #[test]
    fn ppp_is_reproducible() {
        let p = NetworkParams::default();
        let c = SimConfig {
            window_radius_factor: 10.0,
            ..SimConfig::ppp(1, 11)
        };
        let a = sample_deployment(&c, &p).unwrap();
        let b = sample_deployment(&c, &p).unwrap();
        assert_eq!(a, b);
        let r = c.window_radius(&p);
        assert!(a.positions().iter().all(|q| q.x.hypot(q.y) <= r));
    }

    #[test]
    fn empty_file_is_an_error() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "id,x_m,y_m\n# nothing").unwrap();
        assert!(matches!(load_deployment(f.path(), None), Err(Error::EmptyDeployment)));
    }

    #[test]
    fn csv_rows_and_errors() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "# sites\nid,x_m,y_m\n1, 0.0, 0.0\n# skip\n2,100,50\n3,-20.5,10").unwrap();
        let d = load_deployment(f.path(), None).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.positions()[1], Point::new(100.0, 50.0));

        let w = Window::new(-10.0, -10.0, 10.0, 10.0).unwrap();
        match load_deployment(f.path(), Some(w)) {
            Err(Error::OutsideWindow { x, y, .. }) => assert_eq!((x, y), (100.0, 50.0)),
            other => panic!("{other:?}"),
        }

        let mut bad = tempfile::NamedTempFile::new().unwrap();
        writeln!(bad, "id,x_m,y_m\n1,abc,0").unwrap();
        assert!(matches!(load_deployment(bad.path(), None), Err(Error::DeploymentFile { line: 2, .. })));

        let mut header = tempfile::NamedTempFile::new().unwrap();
        writeln!(header, "x,y\n1,2").unwrap();
        assert!(matches!(load_deployment(header.path(), None), Err(Error::DeploymentFile { .. })));
    }
}
