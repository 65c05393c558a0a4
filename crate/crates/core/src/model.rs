//! Network parameters, reuse schemes, deployments and the downlink SINR kernel.
//!
//! Every quantity is linear (powers, SINR thresholds) and distances are in
//! meters. Decibels only appear through [`db_to_linear`] / [`linear_to_db`]
//! at the edges of the crate.
//!
//! Small-scale fading is exponential with *rate* `mu`, so a unit-power
//! Rayleigh channel is `mu = 1`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Base-station density quoted for the 48-sub-band system-design runs,
/// `1 / (4000 π²)` per m².
pub const REFERENCE_LAMBDA: f64 = 1.0 / (4000.0 * PI * PI);

/// Density of the 25-site grid preset: 25 base stations over 10 km².
pub const GRID_PRESET_LAMBDA: f64 = 25.0 / 10.0e6;

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// `R^{-alpha}` with a fast path for the common `alpha = 4`.
#[inline]
pub fn path_gain(distance: f64, alpha: f64) -> f64 {
    if alpha == 4.0 {
        let d2 = distance * distance;
        1.0 / (d2 * d2)
    } else {
        distance.powf(-alpha)
    }
}

/// Physical and scheme-level parameters of the downlink model.
///
/// Built through [`NetworkParams::builder`]; once built the value is
/// immutable and always satisfies its invariants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkParams {
    lambda: f64,
    alpha: f64,
    sigma2: f64,
    power: f64,
    mu: f64,
    delta: u32,
    beta: f64,
    t_ffr: f64,
}

impl Default for NetworkParams {
    fn default() -> Self {
        NetworkParamsBuilder::default()
            .build()
            .expect("defaults are valid")
    }
}

impl NetworkParams {
    pub fn builder() -> NetworkParamsBuilder {
        NetworkParamsBuilder::default()
    }

    /// A builder pre-filled with this parameter set, for deriving variants.
    pub fn to_builder(&self) -> NetworkParamsBuilder {
        NetworkParamsBuilder {
            lambda: self.lambda,
            alpha: self.alpha,
            sigma2: self.sigma2,
            power: self.power,
            mu: self.mu,
            delta: self.delta,
            beta: self.beta,
            t_ffr: self.t_ffr,
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn sigma2(&self) -> f64 {
        self.sigma2
    }
    pub fn power(&self) -> f64 {
        self.power
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
    pub fn delta(&self) -> u32 {
        self.delta
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn t_ffr(&self) -> f64 {
        self.t_ffr
    }

    pub fn is_noiseless(&self) -> bool {
        self.sigma2 == 0.0
    }

    /// SFR effective interference power factor `(Δ - 1 + β) / Δ`.
    pub fn eta(&self) -> f64 {
        effective_interference_factor(self)
    }
}

pub fn effective_interference_factor(params: &NetworkParams) -> f64 {
    eta_of(params.delta, params.beta)
}

pub(crate) fn eta_of(delta: u32, beta: f64) -> f64 {
    let delta = f64::from(delta);
    (delta - 1.0 + beta) / delta
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkParamsBuilder {
    lambda: f64,
    alpha: f64,
    sigma2: f64,
    power: f64,
    mu: f64,
    delta: u32,
    beta: f64,
    t_ffr: f64,
}

impl Default for NetworkParamsBuilder {
    fn default() -> Self {
        NetworkParamsBuilder {
            lambda: REFERENCE_LAMBDA,
            alpha: 4.0,
            sigma2: 0.0,
            power: 1.0,
            mu: 1.0,
            delta: 3,
            beta: 1.0,
            t_ffr: db_to_linear(1.0),
        }
    }
}

impl NetworkParamsBuilder {
    pub fn lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }
    pub fn alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }
    pub fn sigma2(mut self, sigma2: f64) -> Self {
        self.sigma2 = sigma2;
        self
    }
    pub fn no_noise(self) -> Self {
        self.sigma2(0.0)
    }
    pub fn power(mut self, power: f64) -> Self {
        self.power = power;
        self
    }
    pub fn mu(mut self, mu: f64) -> Self {
        self.mu = mu;
        self
    }
    pub fn delta(mut self, delta: u32) -> Self {
        self.delta = delta;
        self
    }
    pub fn beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }
    pub fn t_ffr(mut self, t_ffr: f64) -> Self {
        self.t_ffr = t_ffr;
        self
    }
    pub fn t_ffr_db(self, db: f64) -> Self {
        self.t_ffr(db_to_linear(db))
    }

    pub fn build(self) -> Result<NetworkParams> {
        positive("lambda", self.lambda)?;
        if !(self.alpha > 2.0) || !self.alpha.is_finite() {
            return Err(invalid("alpha", format!("must be > 2, got {}", self.alpha)));
        }
        if !(self.sigma2 >= 0.0) || !self.sigma2.is_finite() {
            return Err(invalid("sigma2", format!("must be >= 0, got {}", self.sigma2)));
        }
        positive("power", self.power)?;
        positive("mu", self.mu)?;
        if self.delta < 1 {
            return Err(invalid("delta", "must be >= 1"));
        }
        if !(self.beta >= 1.0) || !self.beta.is_finite() {
            return Err(invalid("beta", format!("must be >= 1, got {}", self.beta)));
        }
        positive("t_ffr", self.t_ffr)?;
        Ok(NetworkParams {
            lambda: self.lambda,
            alpha: self.alpha,
            sigma2: self.sigma2,
            power: self.power,
            mu: self.mu,
            delta: self.delta,
            beta: self.beta,
            t_ffr: self.t_ffr,
        })
    }
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("must be a finite value > 0, got {value}")))
    }
}

/// The kind of frequency plan, without its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    NoReuse,
    ReuseDelta,
    StrictFfr,
    Sfr,
}

impl SchemeKind {
    pub fn name(self) -> &'static str {
        match self {
            SchemeKind::NoReuse => "no-reuse",
            SchemeKind::ReuseDelta => "reuse-delta",
            SchemeKind::StrictFfr => "strict-ffr",
            SchemeKind::Sfr => "sfr",
        }
    }

    /// FFR schemes reassign edge users to a new sub-band.
    pub fn is_ffr(self) -> bool {
        matches!(self, SchemeKind::StrictFfr | SchemeKind::Sfr)
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "no-reuse" => Ok(SchemeKind::NoReuse),
            "reuse-delta" => Ok(SchemeKind::ReuseDelta),
            "strict-ffr" => Ok(SchemeKind::StrictFfr),
            "sfr" => Ok(SchemeKind::Sfr),
            other => Err(invalid("scheme", format!("unknown scheme `{other}`"))),
        }
    }
}

/// A frequency plan together with its scheme-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReuseScheme {
    NoReuse,
    ReuseDelta { delta: u32 },
    StrictFfr { delta: u32, t_ffr: f64 },
    Sfr { delta: u32, beta: f64, t_ffr: f64 },
}

impl ReuseScheme {
    /// Picks the scheme parameters (Δ, β, T_FFR) out of `params`.
    pub fn from_params(kind: SchemeKind, params: &NetworkParams) -> Self {
        match kind {
            SchemeKind::NoReuse => ReuseScheme::NoReuse,
            SchemeKind::ReuseDelta => ReuseScheme::ReuseDelta {
                delta: params.delta,
            },
            SchemeKind::StrictFfr => ReuseScheme::StrictFfr {
                delta: params.delta,
                t_ffr: params.t_ffr,
            },
            SchemeKind::Sfr => ReuseScheme::Sfr {
                delta: params.delta,
                beta: params.beta,
                t_ffr: params.t_ffr,
            },
        }
    }

    pub fn kind(&self) -> SchemeKind {
        match self {
            ReuseScheme::NoReuse => SchemeKind::NoReuse,
            ReuseScheme::ReuseDelta { .. } => SchemeKind::ReuseDelta,
            ReuseScheme::StrictFfr { .. } => SchemeKind::StrictFfr,
            ReuseScheme::Sfr { .. } => SchemeKind::Sfr,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let delta = self.delta();
        if delta < 1 {
            return Err(invalid("delta", "must be >= 1"));
        }
        if let Some(t_ffr) = self.t_ffr() {
            positive("t_ffr", t_ffr)?;
        }
        if !(self.beta() >= 1.0) || !self.beta().is_finite() {
            return Err(invalid("beta", format!("must be >= 1, got {}", self.beta())));
        }
        Ok(())
    }

    /// Reuse factor; 1 for universal reuse.
    pub fn delta(&self) -> u32 {
        match *self {
            ReuseScheme::NoReuse => 1,
            ReuseScheme::ReuseDelta { delta }
            | ReuseScheme::StrictFfr { delta, .. }
            | ReuseScheme::Sfr { delta, .. } => delta,
        }
    }

    /// Edge power factor; 1 outside SFR.
    pub fn beta(&self) -> f64 {
        match *self {
            ReuseScheme::Sfr { beta, .. } => beta,
            _ => 1.0,
        }
    }

    /// Consolidated interference factor; 1 outside SFR.
    pub fn eta(&self) -> f64 {
        match *self {
            ReuseScheme::Sfr { delta, beta, .. } => eta_of(delta, beta),
            _ => 1.0,
        }
    }

    pub fn t_ffr(&self) -> Option<f64> {
        match *self {
            ReuseScheme::StrictFfr { t_ffr, .. } | ReuseScheme::Sfr { t_ffr, .. } => Some(t_ffr),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UserClass {
    Interior,
    Edge,
}

impl UserClass {
    pub fn name(self) -> &'static str {
        match self {
            UserClass::Interior => "interior",
            UserClass::Edge => "edge",
        }
    }
}

/// Edge iff the pre-assignment SINR falls below the FFR threshold.
pub fn classify(pre_sinr: f64, t_ffr: f64) -> UserClass {
    if pre_sinr < t_ffr {
        UserClass::Edge
    } else {
        UserClass::Interior
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Axis-aligned rectangle, meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub x_min: f64,
    pub y_min: f64,
    pub x_max: f64,
    pub y_max: f64,
}

impl Window {
    pub fn new(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Result<Self> {
        if !(x_max > x_min && y_max > y_min) {
            return Err(invalid("window", "must have positive width and height"));
        }
        Ok(Window {
            x_min,
            y_min,
            x_max,
            y_max,
        })
    }

    /// Square window of half-side `half` centred on the origin.
    pub fn centered_square(half: f64) -> Self {
        Window {
            x_min: -half,
            y_min: -half,
            x_max: half,
            y_max: half,
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.x >= self.x_min && p.x <= self.x_max && p.y >= self.y_min && p.y <= self.y_max
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn center(&self) -> Point {
        Point::new(
            0.5 * (self.x_min + self.x_max),
            0.5 * (self.y_min + self.y_max),
        )
    }

    /// Smallest window holding every point (degenerate extents padded by 1 m).
    pub fn bounding(points: &[Point]) -> Option<Self> {
        let first = points.first()?;
        let mut w = Window {
            x_min: first.x,
            y_min: first.y,
            x_max: first.x,
            y_max: first.y,
        };
        for p in points {
            w.x_min = w.x_min.min(p.x);
            w.y_min = w.y_min.min(p.y);
            w.x_max = w.x_max.max(p.x);
            w.y_max = w.y_max.max(p.y);
        }
        if w.x_max - w.x_min <= 0.0 {
            w.x_min -= 0.5;
            w.x_max += 0.5;
        }
        if w.y_max - w.y_min <= 0.0 {
            w.y_min -= 0.5;
            w.y_max += 0.5;
        }
        Some(w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeploymentKind {
    Ppp,
    Grid,
    File,
}

/// A finite set of base-station sites inside a window.
#[derive(Debug, Clone, PartialEq)]
pub struct Deployment {
    positions: Vec<Point>,
    window: Window,
    kind: DeploymentKind,
}

impl Deployment {
    pub fn new(positions: Vec<Point>, window: Window, kind: DeploymentKind) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::EmptyDeployment);
        }
        if let Some(p) = positions.iter().find(|p| !window.contains(p)) {
            return Err(invalid(
                "positions",
                format!("({}, {}) is outside the window", p.x, p.y),
            ));
        }
        Ok(Deployment {
            positions,
            window,
            kind,
        })
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn kind(&self) -> DeploymentKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Index of the site closest to `p`.
    pub fn nearest(&self, p: &Point) -> usize {
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (i, q) in self.positions.iter().enumerate() {
            let d = (q.x - p.x).powi(2) + (q.y - p.y).powi(2);
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        best
    }
}

/// Transmit-power class of an interfering downlink.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerClass {
    /// Serving an interior user, power `P`.
    Interior,
    /// Serving an edge user, power `βP` under SFR.
    Edge,
    /// The consolidated SFR interferer at `ηP`.
    Effective,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interferer {
    pub distance: f64,
    pub fade: f64,
    pub power_class: PowerClass,
    pub subband: u32,
}

/// One realisation of the typical user's downlink: the serving link plus every
/// other base station.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DownlinkSample {
    pub serving_distance: f64,
    pub serving_fade: f64,
    /// Sub-band the user is scheduled on; only interferers on it count.
    pub subband: u32,
    pub interferers: Vec<Interferer>,
}

impl DownlinkSample {
    /// Checks the nearest-BS association and positive fades.
    pub fn validate(&self) -> Result<()> {
        if !(self.serving_fade > 0.0) {
            return Err(invalid("serving_fade", "must be > 0"));
        }
        if !(self.serving_distance > 0.0) {
            return Err(invalid("serving_distance", "must be > 0"));
        }
        for z in &self.interferers {
            if z.distance < self.serving_distance {
                return Err(invalid(
                    "interferers",
                    format!(
                        "interferer at {} m is closer than the serving BS at {} m",
                        z.distance, self.serving_distance
                    ),
                ));
            }
            if !(z.fade > 0.0) {
                return Err(invalid("interferers", "fades must be > 0"));
            }
        }
        Ok(())
    }
}

/// Downlink SINR of `sample` for a user of class `user_class` under `scheme`.
///
/// The serving power is `βP` for an SFR edge user and `P` otherwise. Interferers
/// on other sub-bands are ignored; those on the user's sub-band contribute
/// `P`, `βP` or `ηP` according to their power class (β and η taken from the
/// scheme, both 1 outside SFR).
pub fn sinr(
    sample: &DownlinkSample,
    params: &NetworkParams,
    scheme: &ReuseScheme,
    user_class: UserClass,
) -> Result<f64> {
    debug_assert!(sample.validate().is_ok(), "invalid downlink sample");
    let alpha = params.alpha;
    let beta = scheme.beta();
    let eta = scheme.eta();
    let mut interference = 0.0;
    let mut active = 0usize;
    for z in &sample.interferers {
        if z.subband != sample.subband {
            continue;
        }
        let weight = match z.power_class {
            PowerClass::Interior => 1.0,
            PowerClass::Edge => beta,
            PowerClass::Effective => eta,
        };
        interference += weight * z.fade * path_gain(z.distance, alpha);
        active += 1;
    }
    if params.sigma2 == 0.0 && (active == 0 || interference == 0.0) {
        return Err(Error::DegenerateSample);
    }
    let serving_power = match (scheme.kind(), user_class) {
        (SchemeKind::Sfr, UserClass::Edge) => beta * params.power,
        _ => params.power,
    };
    let signal = serving_power * sample.serving_fade * path_gain(sample.serving_distance, alpha);
    Ok(signal / (params.sigma2 + params.power * interference))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(delta: u32, beta: f64) -> NetworkParams {
        NetworkParams::builder()
            .delta(delta)
            .beta(beta)
            .no_noise()
            .build()
            .unwrap()
    }

    fn single(class: PowerClass) -> DownlinkSample {
        DownlinkSample {
            serving_distance: 1.0,
            serving_fade: 1.0,
            subband: 0,
            interferers: vec![Interferer {
                distance: 2.0,
                fade: 1.0,
                power_class: class,
                subband: 0,
            }],
        }
    }

    #[test]
    fn eta_examples() {
        assert_eq!(params(3, 1.0).eta(), 1.0);
        assert_eq!(params(3, 4.0).eta(), 2.0);
        assert!((params(3, 15.0).eta() - 17.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn eta_stays_between_one_and_beta() {
        for delta in 1..8 {
            for beta in [1.0, 1.5, 4.0, 15.0, 1e4] {
                let eta = params(delta, beta).eta();
                assert!((1.0..=beta).contains(&eta));
            }
        }
    }

    #[test]
    fn builder_rejects_bad_values() {
        assert!(NetworkParams::builder().alpha(2.0).build().is_err());
        assert!(NetworkParams::builder().beta(0.5).build().is_err());
        assert!(NetworkParams::builder().delta(0).build().is_err());
        assert!(NetworkParams::builder().sigma2(-1.0).build().is_err());
        assert!(NetworkParams::builder().lambda(0.0).build().is_err());
        assert!(NetworkParams::builder().t_ffr(0.0).build().is_err());
        assert!(NetworkParams::builder().sigma2(0.0).build().is_ok());
    }

    #[test]
    fn single_interferer_sinr() {
        let p = params(3, 1.0);
        let s = sinr(&single(PowerClass::Interior), &p, &ReuseScheme::NoReuse, UserClass::Interior)
            .unwrap();
        assert!((s - 16.0).abs() < 1e-12);
    }

    #[test]
    fn sfr_edge_numerator_scales_with_beta() {
        let p = params(3, 2.0);
        let scheme = ReuseScheme::from_params(SchemeKind::Sfr, &p);
        let s = sinr(&single(PowerClass::Interior), &p, &scheme, UserClass::Edge).unwrap();
        assert!((s - 32.0).abs() < 1e-12);
    }

    #[test]
    fn pure_snr_without_interferers() {
        let p = NetworkParams::builder().sigma2(0.5).power(2.0).build().unwrap();
        let sample = DownlinkSample {
            serving_distance: 2.0,
            serving_fade: 3.0,
            subband: 0,
            interferers: vec![],
        };
        let s = sinr(&sample, &p, &ReuseScheme::NoReuse, UserClass::Interior).unwrap();
        assert!((s - 2.0 * 3.0 / 16.0 / 0.5).abs() < 1e-12);
    }

    #[test]
    fn no_interference_and_no_noise_is_an_error() {
        let p = params(3, 1.0);
        let mut sample = single(PowerClass::Interior);
        sample.interferers[0].subband = 1;
        assert!(matches!(
            sinr(&sample, &p, &ReuseScheme::NoReuse, UserClass::Edge),
            Err(Error::DegenerateSample)
        ));
        sample.interferers.clear();
        assert!(matches!(
            sinr(&sample, &p, &ReuseScheme::NoReuse, UserClass::Edge),
            Err(Error::DegenerateSample)
        ));
    }

    #[test]
    fn other_subbands_are_ignored() {
        let p = params(3, 1.0);
        let mut sample = single(PowerClass::Interior);
        sample.interferers.push(Interferer {
            distance: 1.5,
            fade: 10.0,
            power_class: PowerClass::Interior,
            subband: 2,
        });
        let s = sinr(&sample, &p, &ReuseScheme::NoReuse, UserClass::Interior).unwrap();
        assert!((s - 16.0).abs() < 1e-12);
    }

    #[test]
    fn classification_partitions_users() {
        for pre in [0.0, 0.5, 1.0, 1.2589, 2.0, 100.0] {
            let c = classify(pre, 1.2589);
            assert_eq!(c == UserClass::Edge, pre < 1.2589);
            assert_eq!(c == UserClass::Interior, pre >= 1.2589);
        }
    }

    #[test]
    fn scheme_names_round_trip() {
        for k in [
            SchemeKind::NoReuse,
            SchemeKind::ReuseDelta,
            SchemeKind::StrictFfr,
            SchemeKind::Sfr,
        ] {
            assert_eq!(k.name().parse::<SchemeKind>().unwrap(), k);
        }
        assert!("ffr".parse::<SchemeKind>().is_err());
    }

    fn arb_sample() -> impl Strategy<Value = DownlinkSample> {
        (
            0.1f64..10.0,
            0.01f64..5.0,
            prop::collection::vec((1.0f64..20.0, 0.01f64..5.0, 0u32..2), 1..12),
        )
            .prop_map(|(r, g, zs)| DownlinkSample {
                serving_distance: r,
                serving_fade: g,
                subband: 0,
                interferers: zs
                    .into_iter()
                    .map(|(k, fade, edge)| Interferer {
                        distance: r * k,
                        fade,
                        power_class: if edge == 1 {
                            PowerClass::Edge
                        } else {
                            PowerClass::Interior
                        },
                        subband: 0,
                    })
                    .collect(),
            })
    }

    proptest! {
        #[test]
        fn sinr_monotone_in_fades_and_noise(sample in arb_sample(), idx in 0usize..12, bump in 0.01f64..3.0) {
            let p = NetworkParams::builder().sigma2(1e-3).beta(3.0).build().unwrap();
            let scheme = ReuseScheme::from_params(SchemeKind::Sfr, &p);
            let base = sinr(&sample, &p, &scheme, UserClass::Edge).unwrap();

            let mut louder = sample.clone();
            let i = idx % louder.interferers.len();
            louder.interferers[i].fade += bump;
            prop_assert!(sinr(&louder, &p, &scheme, UserClass::Edge).unwrap() < base);

            let mut stronger = sample.clone();
            stronger.serving_fade += bump;
            prop_assert!(sinr(&stronger, &p, &scheme, UserClass::Edge).unwrap() > base);

            let noisier = p.to_builder().sigma2(p.sigma2() + bump).build().unwrap();
            prop_assert!(sinr(&sample, &noisier, &scheme, UserClass::Edge).unwrap() < base);
        }

        #[test]
        fn sfr_edge_sinr_scales_linearly_in_beta(sample in arb_sample(), c in 1.0f64..50.0) {
            let mut sample = sample;
            for z in &mut sample.interferers {
                z.power_class = PowerClass::Interior;
            }
            let unit = params(3, 1.0);
            let scaled = params(3, c);
            let s1 = sinr(&sample, &unit, &ReuseScheme::from_params(SchemeKind::Sfr, &unit), UserClass::Edge).unwrap();
            let sc = sinr(&sample, &scaled, &ReuseScheme::from_params(SchemeKind::Sfr, &scaled), UserClass::Edge).unwrap();
            prop_assert!((sc - c * s1).abs() <= 1e-12 * sc.abs());
        }
    }
}
