//! Per-trial downlink simulation.
//!
//! Each trial places the typical user, serves it from the nearest base
//! station and computes its SINR on the band it starts on. Under FFR a user
//! below `T_FFR` is then moved to an edge band: the geometry is kept, every
//! fade is redrawn and the set (or power) of interferers is re-evaluated for
//! the new band. Interior users keep their first SINR.
//!
//! Randomness is split into two ChaCha8 generators keyed by the master seed
//! with the trial index as stream: one for geometry and fades, one for
//! discrete sub-band choices. Outcomes therefore do not depend on the number
//! of worker threads, and schemes that differ only in their discrete choices
//! see the same geometry and fades.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;

use super::config::{DeploymentSource, SimConfig};
use super::deployment::sample_deployment;
use crate::error::{invalid, Error, Result};
use crate::model::{
    classify, sinr, Deployment, DownlinkSample, Interferer, NetworkParams, Point, PowerClass, ReuseScheme, SchemeKind,
    UserClass,
};

/// Worker-count cap read once from the environment.
pub const THREADS_ENV: &str = "FFREVAL_THREADS";

const DISCRETE_SEED_KEY: u64 = 0x9e37_79b9_7f4a_7c15;

/// How SFR interference is modelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InterferenceMode {
    /// Every interferer transmits at the consolidated `ηP`.
    #[default]
    EffectiveEta,
    /// Each base station has its own edge sub-band and transmits at `βP` on
    /// it and `P` elsewhere.
    PerBsExact,
}

impl InterferenceMode {
    pub fn name(self) -> &'static str {
        match self {
            InterferenceMode::EffectiveEta => "effective-eta",
            InterferenceMode::PerBsExact => "per-bs-exact",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialOutcome {
    pub pre_sinr: f64,
    pub user_class: UserClass,
    /// SINR on the edge band; present iff the user was reassigned.
    pub post_sinr: Option<f64>,
    /// Sub-band the user ends up on.
    pub subband: u32,
    pub interferers: u32,
    /// Interferers transmitting on the final sub-band.
    pub active_interferers: u32,
    pub serving_distance: f64,
    pub nearest_interferer: f64,
}

impl TrialOutcome {
    /// SINR the user is finally served at.
    pub fn sinr(&self) -> f64 {
        self.post_sinr.unwrap_or(self.pre_sinr)
    }
}

/// A trial with the edge-band SINR computed whatever the class, so the same
/// draws can be classified against any `T_FFR`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepTrial {
    pub pre_sinr: f64,
    pub post_sinr: Option<f64>,
    pub pre_subband: u32,
    pub post_subband: u32,
    pub interferers: u32,
    pub active_pre: u32,
    pub active_post: u32,
    pub serving_distance: f64,
    pub nearest_interferer: f64,
}

impl SweepTrial {
    /// The outcome this trial would have produced with threshold `t_ffr`.
    pub fn classify(&self, t_ffr: f64) -> TrialOutcome {
        let user_class = classify(self.pre_sinr, t_ffr);
        let reassigned = user_class == UserClass::Edge && self.post_sinr.is_some();
        TrialOutcome {
            pre_sinr: self.pre_sinr,
            user_class,
            post_sinr: if reassigned { self.post_sinr } else { None },
            subband: if reassigned { self.post_subband } else { self.pre_subband },
            interferers: self.interferers,
            active_interferers: if reassigned { self.active_post } else { self.active_pre },
            serving_distance: self.serving_distance,
            nearest_interferer: self.nearest_interferer,
        }
    }
}

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

enum Geometry {
    Ppp { pi_lambda: f64, radius: f64 },
    Fixed { sites: Deployment, serving: usize, half: f64 },
}

impl Geometry {
    fn new(config: &SimConfig, params: &NetworkParams) -> Result<Self> {
        config.validate()?;
        match config.source {
            DeploymentSource::Ppp => Ok(Geometry::Ppp {
                pi_lambda: std::f64::consts::PI * params.lambda(),
                radius: config.window_radius(params),
            }),
            _ => {
                let sites = sample_deployment(config, params)?;
                let centre = sites.window().center();
                let serving = sites.nearest(&centre);
                let home = sites.positions()[serving];
                let nn = sites
                    .positions()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != serving)
                    .map(|(_, p)| p.distance(&home))
                    .fold(f64::INFINITY, f64::min);
                let half = if nn.is_finite() && nn > 0.0 {
                    2.0 * nn
                } else {
                    0.5 * sites.window().width().max(sites.window().height())
                };
                Ok(Geometry::Fixed { sites, serving, half })
            }
        }
    }

    /// Fills `others` with interferer distances and returns the serving
    /// distance.
    fn draw(&self, rng: &mut ChaCha8Rng, others: &mut Vec<f64>) -> Result<f64> {
        others.clear();
        match self {
            Geometry::Ppp { pi_lambda, radius } => {
                // Distances from the origin of a planar PPP: π λ r_k² are the
                // arrival times of a unit-rate Poisson process.
                let mut gamma = 0.0;
                let mut serving = None;
                loop {
                    gamma += rng.sample::<f64, _>(Exp1);
                    let r = (gamma / pi_lambda).sqrt();
                    if r > *radius {
                        break;
                    }
                    match serving {
                        None => serving = Some(r),
                        Some(_) => others.push(r),
                    }
                }
                serving.ok_or(Error::EmptyDeployment)
            }
            Geometry::Fixed { sites, serving, half } => {
                let home = sites.positions()[*serving];
                let user = loop {
                    let p = Point::new(
                        home.x + half * (2.0 * rng.random::<f64>() - 1.0),
                        home.y + half * (2.0 * rng.random::<f64>() - 1.0),
                    );
                    if sites.nearest(&p) == *serving {
                        break p;
                    }
                };
                for (i, site) in sites.positions().iter().enumerate() {
                    if i != *serving {
                        others.push(site.distance(&user));
                    }
                }
                Ok(home.distance(&user).max(f64::MIN_POSITIVE))
            }
        }
    }
}

#[derive(Default)]
struct Workspace {
    distances: Vec<f64>,
    sample: DownlinkSample,
    home_bands: Vec<u32>,
}

fn fade(rng: &mut ChaCha8Rng, mu: f64) -> f64 {
    let g: f64 = rng.sample(Exp1);
    (g / mu).max(f64::MIN_POSITIVE)
}

/// SINR with zero interference and zero noise reported as `+∞`.
fn sinr_or_unbounded(sample: &DownlinkSample, params: &NetworkParams, scheme: &ReuseScheme, class: UserClass) -> Result<f64> {
    match sinr(sample, params, scheme, class) {
        Err(Error::DegenerateSample) => Ok(f64::INFINITY),
        other => other,
    }
}

fn count_active(sample: &DownlinkSample) -> u32 {
    sample.interferers.iter().filter(|z| z.subband == sample.subband).count() as u32
}

struct Engine<'a> {
    params: &'a NetworkParams,
    scheme: &'a ReuseScheme,
    mode: InterferenceMode,
    geometry: Geometry,
    seed: u64,
}

impl Engine<'_> {
    fn trial(&self, index: u64, ws: &mut Workspace, post_always: bool) -> Result<SweepTrial> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        let mut disc = ChaCha8Rng::seed_from_u64(self.seed ^ DISCRETE_SEED_KEY);
        disc.set_stream(index);

        let params = self.params;
        let mu = params.mu();
        let delta = self.scheme.delta();
        let serving_distance = self.geometry.draw(&mut rng, &mut ws.distances)?;
        if ws.distances.is_empty() && params.is_noiseless() {
            return Err(Error::DegenerateSample);
        }
        let nearest_interferer = ws.distances.iter().copied().fold(f64::INFINITY, f64::min);

        let pre_band = disc.random_range(0..delta);
        let post_band = disc.random_range(0..delta);
        ws.home_bands.clear();
        ws.home_bands.extend(ws.distances.iter().map(|_| disc.random_range(0..delta)));

        let kind = self.scheme.kind();
        let sfr_class = |home: u32, band: u32| match self.mode {
            InterferenceMode::EffectiveEta => PowerClass::Effective,
            InterferenceMode::PerBsExact if home == band => PowerClass::Edge,
            InterferenceMode::PerBsExact => PowerClass::Interior,
        };

        // First band: the common band for Strict FFR and universal reuse, the
        // user's reuse-Δ band, or an SFR band shared by every cell.
        let s = &mut ws.sample;
        s.serving_distance = serving_distance;
        s.serving_fade = fade(&mut rng, mu);
        s.subband = match kind {
            SchemeKind::ReuseDelta | SchemeKind::Sfr => pre_band,
            _ => 0,
        };
        s.interferers.clear();
        for (&distance, &home) in ws.distances.iter().zip(&ws.home_bands) {
            let (subband, power_class) = match kind {
                SchemeKind::ReuseDelta => (home, PowerClass::Interior),
                SchemeKind::Sfr => (pre_band, sfr_class(home, pre_band)),
                _ => (0, PowerClass::Interior),
            };
            s.interferers.push(Interferer {
                distance,
                fade: fade(&mut rng, mu),
                power_class,
                subband,
            });
        }
        let pre_sinr = sinr_or_unbounded(s, params, self.scheme, UserClass::Interior)?;
        let active_pre = count_active(s);
        let pre_subband = s.subband;

        let reassign = match self.scheme.t_ffr() {
            Some(t_ffr) => post_always || pre_sinr < t_ffr,
            None => false,
        };
        let (post_sinr, post_subband, active_post) = if reassign {
            s.serving_fade = fade(&mut rng, mu);
            s.subband = match kind {
                SchemeKind::StrictFfr => 1 + post_band,
                _ => post_band,
            };
            for (z, &home) in s.interferers.iter_mut().zip(&ws.home_bands) {
                z.fade = fade(&mut rng, mu);
                match kind {
                    SchemeKind::StrictFfr => z.subband = 1 + home,
                    _ => {
                        z.subband = post_band;
                        z.power_class = sfr_class(home, post_band);
                    }
                }
            }
            let post = sinr_or_unbounded(s, params, self.scheme, UserClass::Edge)?;
            (Some(post), s.subband, count_active(s))
        } else {
            (None, pre_subband, active_pre)
        };

        Ok(SweepTrial {
            pre_sinr,
            post_sinr,
            pre_subband,
            post_subband,
            interferers: ws.distances.len() as u32,
            active_pre,
            active_post,
            serving_distance,
            nearest_interferer,
        })
    }

    fn run(&self, trials: usize, post_always: bool) -> Result<Vec<SweepTrial>> {
        pool().install(|| {
            (0..trials as u64)
                .into_par_iter()
                .map_init(Workspace::default, |ws, i| self.trial(i, ws, post_always))
                .collect()
        })
    }
}

fn engine<'a>(
    config: &SimConfig,
    params: &'a NetworkParams,
    scheme: &'a ReuseScheme,
    mode: InterferenceMode,
) -> Result<Engine<'a>> {
    scheme.validate()?;
    Ok(Engine {
        params,
        scheme,
        mode,
        geometry: Geometry::new(config, params)?,
        seed: config.seed,
    })
}

fn classify_all(trials: Vec<SweepTrial>, t_ffr: f64) -> Vec<TrialOutcome> {
    trials.iter().map(|t| t.classify(t_ffr)).collect()
}

/// Strict FFR with the scheme parameters taken from `params`.
pub fn simulate_strict_ffr(config: &SimConfig, params: &NetworkParams) -> Result<Vec<TrialOutcome>> {
    let scheme = ReuseScheme::from_params(SchemeKind::StrictFfr, params);
    simulate(config, params, &scheme, InterferenceMode::EffectiveEta)
}

/// SFR with the scheme parameters taken from `params`.
pub fn simulate_sfr(config: &SimConfig, params: &NetworkParams, mode: InterferenceMode) -> Result<Vec<TrialOutcome>> {
    let scheme = ReuseScheme::from_params(SchemeKind::Sfr, params);
    simulate(config, params, &scheme, mode)
}

/// Universal reuse or reuse-Δ. Users are classified against `params.t_ffr()`
/// but never reassigned.
pub fn simulate_baseline(config: &SimConfig, params: &NetworkParams, scheme: &ReuseScheme) -> Result<Vec<TrialOutcome>> {
    if scheme.kind().is_ffr() {
        return Err(Error::SchemeMismatch(format!("{} is not a baseline", scheme.kind())));
    }
    simulate(config, params, scheme, InterferenceMode::EffectiveEta)
}

/// Runs `config.trials` trials of `scheme`. `mode` only matters for SFR.
pub fn simulate(
    config: &SimConfig,
    params: &NetworkParams,
    scheme: &ReuseScheme,
    mode: InterferenceMode,
) -> Result<Vec<TrialOutcome>> {
    let engine = engine(config, params, scheme, mode)?;
    let t_ffr = scheme.t_ffr().unwrap_or(params.t_ffr());
    Ok(classify_all(engine.run(config.trials, false)?, t_ffr))
}

/// Runs trials with the edge-band SINR computed for every user, for
/// classification against several thresholds. The scheme's own `T_FFR` is
/// ignored.
pub fn simulate_sweep(
    config: &SimConfig,
    params: &NetworkParams,
    scheme: &ReuseScheme,
    mode: InterferenceMode,
) -> Result<Vec<SweepTrial>> {
    if !(config.trials > 0) {
        return Err(invalid("trials", "must be >= 1"));
    }
    engine(config, params, scheme, mode)?.run(config.trials, true)
}
