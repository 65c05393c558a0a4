//! Command-line front end behind the `ffreval` binary.
//!
//! Every command writes a CSV whose leading `#` lines echo the resolved
//! parameters and seed, so a rerun of the same command reproduces the file
//! byte for byte. Exit codes: 0 success, 1 runtime failure, 2 configuration
//! error, 3 a Monte-Carlo oracle check failed.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::allocation::{allocation_for_edge, sinr_proportional, strict_allocation, AllocationPlan};
use crate::analytic::{
    analytic_curve, rate_analytic, AnalyticOptions, Conditioning, CoverageQuery, RateQuery, SfrDenominator,
};
use crate::curve::db_grid;
use crate::error::Error;
use crate::model::{db_to_linear, linear_to_db, NetworkParams, ReuseScheme, SchemeKind, REFERENCE_LAMBDA};
use crate::montecarlo::{
    estimate_ccdf, estimate_rate, simulate, sum_rate_proportional_sweep, sum_rate_sweep, DeploymentSource,
    InterferenceMode, SimConfig, SumRate,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ffreval", version, about = "Coverage, rate and sub-band planning for Strict FFR and SFR downlinks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// SINR CCDF over a threshold grid, analytic against Monte-Carlo.
    Coverage(CoverageArgs),
    /// Average edge-user rate over a T_FFR grid.
    Rate(RateArgs),
    /// Per-cell sum rate over edge sub-band counts or T_FFR.
    Sumrate(SumRateArgs),
    /// Sub-band plan for one scheme.
    Allocate(AllocateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    NoReuse,
    ReuseDelta,
    StrictFfr,
    Sfr,
}

impl From<SchemeArg> for SchemeKind {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::NoReuse => SchemeKind::NoReuse,
            SchemeArg::ReuseDelta => SchemeKind::ReuseDelta,
            SchemeArg::StrictFfr => SchemeKind::StrictFfr,
            SchemeArg::Sfr => SchemeKind::Sfr,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Edge,
    Interior,
    All,
}

impl From<ClassArg> for Conditioning {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Edge => Conditioning::Edge,
            ClassArg::Interior => Conditioning::Interior,
            ClassArg::All => Conditioning::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DenominatorArg {
    EtaWeighted,
    Thinned,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    EffectiveEta,
    PerBsExact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    #[value(name = "csv+plotscript")]
    CsvPlotscript,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepArg {
    /// Fixed T_FFR, varying edge sub-band count.
    NEdge,
    /// SINR-proportional plans over a T_FFR grid, every scheme.
    Tffr,
}

/// Network, simulation and output options shared by every command.
#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value = "strict-ffr")]
    pub scheme: SchemeArg,
    /// Path-loss exponent.
    #[arg(long, default_value_t = 4.0)]
    pub alpha: f64,
    /// Base-station density per m².
    #[arg(long, default_value_t = REFERENCE_LAMBDA)]
    pub lambda: f64,
    #[arg(long, conflicts_with = "sigma2")]
    pub no_noise: bool,
    /// Noise power, linear.
    #[arg(long)]
    pub sigma2: Option<f64>,
    /// Transmit power, linear.
    #[arg(long, default_value_t = 1.0)]
    pub power: f64,
    /// Fading rate.
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 3)]
    pub delta: u32,
    /// SFR edge power factor.
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// FFR threshold, dB.
    #[arg(long, allow_negative_numbers = true)]
    pub tffr_db: Option<f64>,
    /// Monte-Carlo trials; 0 skips simulation.
    #[arg(long, default_value_t = 100_000)]
    pub trials: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// PPP window radius in mean nearest-neighbour distances.
    #[arg(long, default_value_t = crate::montecarlo::config::DEFAULT_WINDOW_RADIUS_FACTOR)]
    pub window_factor: f64,
    /// Base stations from a CSV file with header `id,x_m,y_m`.
    #[arg(long, conflicts_with = "grid")]
    pub deployment: Option<PathBuf>,
    /// Square-lattice deployment, `count:area_km2`.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long, value_enum, default_value = "eta-weighted")]
    pub denominator: DenominatorArg,
    #[arg(long, value_enum, default_value = "effective-eta")]
    pub interference_mode: ModeArg,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct CoverageArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "edge")]
    pub class: ClassArg,
    /// Threshold grid in dB, `lo:hi:step`.
    #[arg(long, default_value = "-10:20:1", allow_hyphen_values = true)]
    pub t_grid_db: String,
}

#[derive(Debug, Clone, Args)]
pub struct RateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// T_FFR grid in dB, `lo:hi:step`.
    #[arg(long, default_value = "-10:10:5", allow_hyphen_values = true)]
    pub tffr_grid_db: String,
}

#[derive(Debug, Clone, Args)]
pub struct SumRateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "n-edge")]
    pub sweep: SweepArg,
    #[arg(long, default_value_t = 48)]
    pub n_band: u32,
    /// Edge sub-band counts for the `n-edge` sweep, comma separated.
    #[arg(long, default_value = "2,4,8,12,16")]
    pub n_edge: String,
    /// T_FFR grid in dB for the `tffr` sweep, `lo:hi:step`.
    #[arg(long, default_value = "-5:10:1", allow_hyphen_values = true)]
    pub tffr_grid_db: String,
}

#[derive(Debug, Clone, Args)]
pub struct AllocateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 48)]
    pub n_band: u32,
    /// Explicit edge sub-band count instead of the SINR-proportional rule.
    #[arg(long, conflicts_with = "n_int")]
    pub n_edge: Option<u32>,
    /// Explicit Strict FFR interior sub-band count.
    #[arg(long)]
    pub n_int: Option<u32>,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Runtime(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { .. } | Error::SchemeMismatch(_) | Error::InfeasibleAllocation(_) => {
                CliError::Config(e.to_string())
            }
            Error::DeploymentFile { .. } | Error::OutsideWindow { .. } => CliError::Config(e.to_string()),
            other => CliError::Runtime(other),
        }
    }
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn parse_range(flag: &str, s: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let nums: Option<Vec<f64>> = parts.iter().map(|p| p.trim().parse().ok()).collect();
    match nums.as_deref() {
        Some(&[lo, hi, step]) => db_grid(lo, hi, step).map_err(|e| config_err(format!("--{flag}: {e}"))),
        _ => Err(config_err(format!("--{flag} expects lo:hi:step, got `{s}`"))),
    }
}

fn parse_grid(s: &str) -> Result<DeploymentSource, CliError> {
    let (n, area) = s
        .split_once(':')
        .ok_or_else(|| config_err(format!("--grid expects count:area_km2, got `{s}`")))?;
    let count = n.trim().parse().map_err(|_| config_err(format!("--grid: bad count `{n}`")))?;
    let km2: f64 = area.trim().parse().map_err(|_| config_err(format!("--grid: bad area `{area}`")))?;
    Ok(DeploymentSource::Grid {
        count,
        area_m2: km2 * 1e6,
    })
}

/// Parameters, scheme and simulation settings resolved from the flags.
struct Resolved {
    params: NetworkParams,
    scheme: ReuseScheme,
    sim: SimConfig,
    opts: AnalyticOptions,
    mode: InterferenceMode,
    tffr_db: f64,
}

impl CommonArgs {
    fn resolve(&self, needs_tffr: bool) -> Result<Resolved, CliError> {
        let kind = SchemeKind::from(self.scheme);
        let tffr_db = match self.tffr_db {
            Some(db) => db,
            None if needs_tffr => {
                return Err(config_err(format!("--tffr-db is required for scheme {kind}")));
            }
            None => linear_to_db(NetworkParams::default().t_ffr()),
        };
        let sigma2 = match (self.no_noise, self.sigma2) {
            (true, _) => 0.0,
            (false, Some(s)) => s,
            (false, None) => 0.0,
        };
        let params = NetworkParams::builder()
            .lambda(self.lambda)
            .alpha(self.alpha)
            .sigma2(sigma2)
            .power(self.power)
            .mu(self.mu)
            .delta(self.delta)
            .beta(self.beta)
            .t_ffr_db(tffr_db)
            .build()?;
        let source = match (&self.deployment, &self.grid) {
            (Some(path), _) => DeploymentSource::File(path.clone()),
            (None, Some(g)) => parse_grid(g)?,
            (None, None) => DeploymentSource::Ppp,
        };
        let sim = SimConfig {
            trials: self.trials.max(1),
            seed: self.seed,
            window_radius_factor: self.window_factor,
            source,
        };
        sim.validate()?;
        let opts = AnalyticOptions {
            sfr_denominator: match self.denominator {
                DenominatorArg::EtaWeighted => SfrDenominator::EtaWeighted,
                DenominatorArg::Thinned => SfrDenominator::Thinned,
            },
            ..AnalyticOptions::default()
        };
        let mode = match self.interference_mode {
            ModeArg::EffectiveEta => InterferenceMode::EffectiveEta,
            ModeArg::PerBsExact => InterferenceMode::PerBsExact,
        };
        if self.format == FormatArg::CsvPlotscript && self.out.is_none() {
            return Err(config_err("--format csv+plotscript needs --out"));
        }
        Ok(Resolved {
            params,
            scheme: ReuseScheme::from_params(kind, &params),
            sim,
            opts,
            mode,
            tffr_db,
        })
    }

    fn header(&self, command: &str, r: &Resolved, extra: &[(&str, String)]) -> String {
        let p = &r.params;
        let source = match &r.sim.source {
            DeploymentSource::Ppp => "ppp".to_string(),
            DeploymentSource::Grid { count, area_m2 } => format!("grid {count} sites over {} km2", area_m2 / 1e6),
            DeploymentSource::File(path) => format!("file {}", path.display()),
        };
        let mut h = format!("# ffreval {command}\n");
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(h, "# {k} = {v}");
        };
        kv("scheme", r.scheme.kind().to_string());
        kv("lambda_per_m2", format!("{:e}", p.lambda()));
        kv("alpha", p.alpha().to_string());
        kv("sigma2", p.sigma2().to_string());
        kv("power", p.power().to_string());
        kv("mu", p.mu().to_string());
        kv("delta", p.delta().to_string());
        kv("beta", p.beta().to_string());
        kv("eta", p.eta().to_string());
        kv("tffr_db", r.tffr_db.to_string());
        kv("trials", self.trials.to_string());
        kv("seed", self.seed.to_string());
        kv("window_factor", self.window_factor.to_string());
        kv("deployment", source);
        kv(
            "denominator",
            match r.opts.sfr_denominator {
                SfrDenominator::EtaWeighted => "eta-weighted",
                SfrDenominator::Thinned => "thinned",
            }
            .to_string(),
        );
        kv("interference_mode", r.mode.name().to_string());
        for (k, v) in extra {
            kv(k, v.clone());
        }
        h
    }
}

fn emit(common: &CommonArgs, body: &str, plot: Option<&str>) -> Result<(), CliError> {
    match &common.out {
        Some(path) => {
            fs::write(path, body).map_err(|e| CliError::Runtime(e.into()))?;
            if let (FormatArg::CsvPlotscript, Some(script)) = (common.format, plot) {
                fs::write(plot_path(path), script).map_err(|e| CliError::Runtime(e.into()))?;
            }
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).map_err(|e| CliError::Runtime(e.into()))?;
        }
    }
    Ok(())
}

/// `out.csv` → `out.gp`.
pub fn plot_path(out: &Path) -> PathBuf {
    out.with_extension("gp")
}

fn plot_script(data: &Path, title: &str, xlabel: &str, ylabel: &str, series: &[(usize, Option<usize>, &str)]) -> String {
    let file = data.file_name().map_or_else(|| data.display().to_string(), |f| f.to_string_lossy().into_owned());
    let mut s = String::new();
    let _ = writeln!(s, "# gnuplot script for {file}");
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set title '{title}'");
    let _ = writeln!(s, "set xlabel '{xlabel}'");
    let _ = writeln!(s, "set ylabel '{ylabel}'");
    let _ = writeln!(s, "set grid");
    let _ = writeln!(s, "set key top right");
    let plots: Vec<String> = series
        .iter()
        .map(|(col, err, name)| match err {
            Some(e) => format!("'{file}' every ::1 using 1:{col}:{e} with yerrorbars title '{name}'"),
            None => format!("'{file}' every ::1 using 1:{col} with lines title '{name}'"),
        })
        .collect();
    let _ = writeln!(s, "plot {}", plots.join(", \\\n     "));
    s
}

fn num(v: f64) -> String {
    format!("{v:.8}")
}

fn cmd_coverage(args: &CoverageArgs) -> Result<bool, CliError> {
    let c = &args.common;
    let class = Conditioning::from(args.class);
    let kind = SchemeKind::from(c.scheme);
    let r = c.resolve(kind.is_ffr() || class != Conditioning::All)?;
    if kind.is_ffr() && class == Conditioning::All {
        return Err(config_err(format!("--class all is not defined for {kind}")));
    }
    let grid_db = parse_range("t-grid-db", &args.t_grid_db)?;
    let grid: Vec<f64> = grid_db.iter().copied().map(db_to_linear).collect();
    let analytic = analytic_curve(&CoverageQuery::new(1.0, r.params, r.scheme, class), &grid, &r.opts)?;
    let with_mc = c.trials > 0;
    let mc = if with_mc {
        let outcomes = simulate(&r.sim, &r.params, &r.scheme, r.mode)?;
        Some(estimate_ccdf(&outcomes, &grid, class)?)
    } else {
        None
    };

    let mut body = c.header("coverage", &r, &[("class", class.name().to_string()), ("t_grid_db", args.t_grid_db.clone())]);
    let mut all_pass = true;
    match &mc {
        Some(mc) => {
            body.push_str("t_db,analytic,mc,mc_halfwidth,pass3sigma\n");
            for ((db, a), m) in grid_db.iter().zip(&analytic.points).zip(&mc.points) {
                let hw = m.half_width.unwrap_or(0.0);
                let pass = (a.ccdf - m.ccdf).abs() <= hw;
                all_pass &= pass;
                let _ = writeln!(body, "{db:.2},{},{},{},{pass}", num(a.ccdf), num(m.ccdf), num(hw));
            }
        }
        None => {
            body.push_str("t_db,analytic\n");
            for (db, a) in grid_db.iter().zip(&analytic.points) {
                let _ = writeln!(body, "{db:.2},{}", num(a.ccdf));
            }
        }
    }
    let plot = c.out.as_deref().map(|out| {
        let series: &[(usize, Option<usize>, &str)] = if with_mc {
            &[(2, None, "analytic"), (3, Some(4), "monte-carlo")]
        } else {
            &[(2, None, "analytic")]
        };
        plot_script(out, &format!("{kind} {} coverage", class.name()), "T (dB)", "P(SINR > T)", series)
    });
    emit(c, &body, plot.as_deref())?;
    Ok(all_pass)
}

fn cmd_rate(args: &RateArgs) -> Result<bool, CliError> {
    let c = &args.common;
    let kind = SchemeKind::from(c.scheme);
    if !kind.is_ffr() {
        return Err(config_err(format!("rate needs an FFR scheme, got {kind}")));
    }
    let r = c.resolve(false)?;
    let grid_db = parse_range("tffr-grid-db", &args.tffr_grid_db)?;
    let with_mc = c.trials > 0;
    let mut body = c.header("rate", &r, &[("class", "edge".into()), ("tffr_grid_db", args.tffr_grid_db.clone())]);
    body.push_str(if with_mc {
        "tffr_db,rate_analytic_nats,rate_mc_nats,halfwidth\n"
    } else {
        "tffr_db,rate_analytic_nats\n"
    });
    let mut all_pass = true;
    for db in &grid_db {
        let p = r.params.to_builder().t_ffr_db(*db).build()?;
        let scheme = ReuseScheme::from_params(kind, &p);
        let analytic = rate_analytic(&RateQuery::new(p, scheme, Conditioning::Edge), &r.opts)?;
        if with_mc {
            let outcomes = simulate(&r.sim, &p, &scheme, r.mode)?;
            let est = estimate_rate(&outcomes, Conditioning::Edge, Some(analytic.upper_limit))?;
            all_pass &= (analytic.nats - est.mean).abs() <= est.half_width;
            let _ = writeln!(body, "{db:.2},{},{},{}", num(analytic.nats), num(est.mean), num(est.half_width));
        } else {
            let _ = writeln!(body, "{db:.2},{}", num(analytic.nats));
        }
    }
    let plot = c.out.as_deref().map(|out| {
        let series: &[(usize, Option<usize>, &str)] = if with_mc {
            &[(2, None, "analytic"), (3, Some(4), "monte-carlo")]
        } else {
            &[(2, None, "analytic")]
        };
        plot_script(out, &format!("{kind} edge rate"), "T_FFR (dB)", "rate (nats/s/Hz)", series)
    });
    emit(c, &body, plot.as_deref())?;
    Ok(all_pass)
}

fn parse_list(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| config_err(format!("--n-edge: bad count `{p}`"))))
        .collect()
}

/// Index of the single sign change of `a - b`, if there is exactly one.
pub fn single_crossover(a: &[f64], b: &[f64]) -> Option<usize> {
    let signs: Vec<bool> = a.iter().zip(b).map(|(x, y)| x > y).collect();
    let changes: Vec<usize> = (1..signs.len()).filter(|&i| signs[i] != signs[i - 1]).collect();
    match changes.as_slice() {
        [i] => Some(*i),
        _ => None,
    }
}

fn cmd_sumrate(args: &SumRateArgs) -> Result<bool, CliError> {
    let c = &args.common;
    match args.sweep {
        SweepArg::NEdge => {
            let kind = SchemeKind::from(c.scheme);
            if !kind.is_ffr() {
                return Err(config_err(format!("the n-edge sweep needs an FFR scheme, got {kind}")));
            }
            let r = c.resolve(true)?;
            let counts = parse_list(&args.n_edge)?;
            let rows = sum_rate_sweep(&r.sim, &r.params, &r.scheme, args.n_band, &counts, r.mode)?;
            let mut body = c.header(
                "sumrate",
                &r,
                &[("sweep", "n-edge".into()), ("n_band", args.n_band.to_string())],
            );
            body.push_str("n_edge,n_int,sum_rate_nats,edge_rate_nats,interior_rate_nats,status\n");
            let mut sums = Vec::new();
            for (n, row) in counts.iter().zip(rows) {
                match row {
                    Ok(s) => {
                        let plan = s.plan.expect("FFR rows carry a plan");
                        sums.push(s.sum_rate);
                        let _ = writeln!(
                            body,
                            "{n},{},{},{},{},ok",
                            plan.n_int,
                            num(s.sum_rate),
                            num(s.edge_rate),
                            num(s.interior_rate)
                        );
                    }
                    Err(Error::InfeasibleAllocation(_)) => {
                        let _ = writeln!(body, "{n},,,,,infeasible");
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            let decreasing = sums.len() > 1 && sums.windows(2).all(|w| w[1] < w[0]);
            let variation = match (sums.iter().copied().reduce(f64::max), sums.iter().copied().reduce(f64::min)) {
                (Some(hi), Some(lo)) if hi > 0.0 => (hi - lo) / hi,
                _ => 0.0,
            };
            let _ = writeln!(body, "# decreasing = {decreasing}");
            let _ = writeln!(body, "# relative_variation = {variation:.6}");
            let plot = c.out.as_deref().map(|out| {
                plot_script(out, &format!("{kind} sum rate"), "N_edge", "sum rate (nats/s/Hz)", &[(3, None, "sum rate")])
            });
            emit(c, &body, plot.as_deref())?;
            Ok(true)
        }
        SweepArg::Tffr => {
            let r = c.resolve(false)?;
            let grid_db = parse_range("tffr-grid-db", &args.tffr_grid_db)?;
            let table = proportional_table(&r, args.n_band, &grid_db)?;
            let mut body = c.header(
                "sumrate",
                &r,
                &[
                    ("sweep", "tffr".into()),
                    ("n_band", args.n_band.to_string()),
                    ("tffr_grid_db", args.tffr_grid_db.clone()),
                ],
            );
            body.push_str(
                "tffr_db,strict_n_edge,strict_clamped,strict_sum_nats,sfr_n_edge,sfr_clamped,sfr_sum_nats,no_reuse_sum_nats,reuse_delta_sum_nats\n",
            );
            for (db, row) in grid_db.iter().zip(&table.rows) {
                let (s, f) = (&row.0, &row.1);
                let (sp, fp) = (s.plan.expect("plan"), f.plan.expect("plan"));
                let _ = writeln!(
                    body,
                    "{db:.2},{},{},{},{},{},{},{},{}",
                    sp.n_edge,
                    sp.clamped,
                    num(s.sum_rate),
                    fp.n_edge,
                    fp.clamped,
                    num(f.sum_rate),
                    num(table.no_reuse),
                    num(table.reuse_delta)
                );
            }
            let strict: Vec<f64> = table.rows.iter().map(|r| r.0.sum_rate).collect();
            let sfr: Vec<f64> = table.rows.iter().map(|r| r.1.sum_rate).collect();
            let crossover = single_crossover(&sfr, &strict)
                .map_or_else(|| "none".to_string(), |i| format!("{:.2}", 0.5 * (grid_db[i - 1] + grid_db[i])));
            let _ = writeln!(body, "# crossover_tffr_db = {crossover}");
            let plot = c.out.as_deref().map(|out| {
                plot_script(
                    out,
                    "sum rate with SINR-proportional allocation",
                    "T_FFR (dB)",
                    "sum rate (nats/s/Hz)",
                    &[(4, None, "strict-ffr"), (7, None, "sfr"), (8, None, "no-reuse"), (9, None, "reuse-delta")],
                )
            });
            emit(c, &body, plot.as_deref())?;
            Ok(true)
        }
    }
}

/// SINR-proportional sum rates for both FFR schemes plus the two baselines.
struct ProportionalTable {
    rows: Vec<(SumRate, SumRate)>,
    no_reuse: f64,
    reuse_delta: f64,
}

fn proportional_table(r: &Resolved, n_band: u32, grid_db: &[f64]) -> Result<ProportionalTable, CliError> {
    let thresholds: Vec<f64> = grid_db.iter().copied().map(db_to_linear).collect();
    let strict = sum_rate_proportional_sweep(&r.sim, &r.params, SchemeKind::StrictFfr, n_band, &thresholds, r.mode, &r.opts)?;
    let sfr = sum_rate_proportional_sweep(&r.sim, &r.params, SchemeKind::Sfr, n_band, &thresholds, r.mode, &r.opts)?;
    let baseline = |scheme: ReuseScheme| -> Result<f64, CliError> {
        let rows = sum_rate_sweep(&r.sim, &r.params, &scheme, n_band, &[0], r.mode)?;
        Ok(rows.into_iter().next().expect("one row")?.sum_rate)
    };
    Ok(ProportionalTable {
        rows: strict.into_iter().zip(sfr).collect(),
        no_reuse: baseline(ReuseScheme::NoReuse)?,
        reuse_delta: baseline(ReuseScheme::ReuseDelta { delta: r.params.delta() })?,
    })
}

fn cmd_allocate(args: &AllocateArgs) -> Result<bool, CliError> {
    let c = &args.common;
    let kind = SchemeKind::from(c.scheme);
    if !kind.is_ffr() {
        return Err(config_err(format!("allocate needs an FFR scheme, got {kind}")));
    }
    let explicit = args.n_edge.is_some() || args.n_int.is_some();
    let r = c.resolve(!explicit)?;
    let plan: AllocationPlan = match (args.n_edge, args.n_int) {
        (Some(n_edge), _) => allocation_for_edge(kind, args.n_band, n_edge, r.params.delta())?,
        (None, Some(n_int)) if kind == SchemeKind::StrictFfr => strict_allocation(args.n_band, n_int, r.params.delta())?,
        (None, Some(_)) => return Err(config_err("--n-int applies to strict-ffr only")),
        (None, None) => sinr_proportional(&r.params, &r.scheme, args.n_band, &r.opts)?,
    };
    let rule = if explicit { "explicit" } else { "sinr-proportional" };
    let mut body = c.header("allocate", &r, &[("rule", rule.into())]);
    let _ = writeln!(body, "{plan}");
    emit(c, &body, None)?;
    Ok(true)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Coverage(a) => cmd_coverage(a),
        Command::Rate(a) => cmd_rate(a),
        Command::Sumrate(a) => cmd_sumrate(a),
        Command::Allocate(a) => cmd_allocate(a),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            eprintln!("error: Monte-Carlo estimate outside the 3-sigma band at one or more points");
            EXIT_ORACLE
        }
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            EXIT_CONFIG
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e}");
            EXIT_RUNTIME
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
