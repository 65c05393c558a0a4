use std::path::Path;
use std::process::Command;

fn ffreval(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ffreval")).args(args).output().unwrap()
}

fn out_arg(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn ffr_without_threshold_is_a_config_error() {
    let out = ffreval(&["coverage", "--scheme", "strict-ffr", "--no-noise", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tffr"));
}

#[test]
fn unknown_flag_is_a_config_error() {
    assert_eq!(ffreval(&["coverage", "--bogus"]).status.code(), Some(2));
}

#[test]
fn all_class_rejected_for_ffr() {
    let out = ffreval(&["coverage", "--scheme", "sfr", "--class", "all", "--tffr-db", "1", "--no-noise"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analytic_only_coverage() {
    let out = ffreval(&["coverage", "--scheme", "strict-ffr", "--tffr-db", "0", "--no-noise", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "t_db,analytic");
    assert_eq!(rows.len(), 32);
    let zero_db = rows.iter().find(|r| r.starts_with("0.00,")).unwrap();
    let value: f64 = zero_db.split(',').nth(1).unwrap().parse().unwrap();
    assert!((value - 0.6648).abs() < 1e-3, "{zero_db}");
}

#[test]
fn output_is_reproducible_and_plot_script_written() {
    let mut seen = Vec::new();
    for _ in 0..2 {
        let dir = tempfile::tempdir().unwrap();
        let out = ffreval(&[
            "coverage", "--scheme", "sfr", "--beta", "4", "--tffr-db", "1", "--no-noise", "--trials", "3000", "--seed",
            "5", "--format", "csv+plotscript", "--out", &out_arg(dir.path(), "c.csv"),
        ]);
        assert!(matches!(out.status.code(), Some(0) | Some(3)));
        let csv = std::fs::read(dir.path().join("c.csv")).unwrap();
        let gp = std::fs::read_to_string(dir.path().join("c.gp")).unwrap();
        assert!(gp.contains("plot 'c.csv'"));
        seen.push((csv, gp));
    }
    assert_eq!(seen[0], seen[1]);
    let header = String::from_utf8_lossy(&seen[0].0);
    assert!(header.contains("# seed = 5"));
    assert!(header.contains("# beta = 4"));
}

#[test]
fn allocate_prints_plan() {
    let out = ffreval(&["allocate", "--scheme", "strict-ffr", "--tffr-db", "1", "--no-noise"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("n_edge = 16"), "{text}");
    assert!(text.contains("idle = 32"), "{text}");
    assert!(text.contains("clamped = true"), "{text}");
}

#[test]
fn sumrate_marks_infeasible_rows() {
    let out = ffreval(&[
        "sumrate", "--scheme", "strict-ffr", "--tffr-db", "3", "--no-noise", "--trials", "2000", "--n-edge", "8,17",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("17,") && l.contains("infeasible")), "{text}");
}
