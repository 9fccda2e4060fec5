//! The `epr-amp` command-line front-end.
//!
//! Every subcommand is a thin delegation to the library. Output is plain
//! text or CSV written with Rust's locale-independent float formatting, so
//! repeated runs with the same arguments produce identical bytes.
//!
//! Exit status: 0 on success, 1 when a computation check fails or a file
//! cannot be written, 2 on a usage error.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bell::{self, ChshSettings};
use crate::error::Error;
use crate::ghz;
use crate::interference::{self, InterferenceConfig};
use crate::model::{self, JointDistribution, PairConfig};
use crate::oracle::{self, MeasurementSetting};
use crate::sampler::{self, SamplerRun};
use crate::Sign;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the directory for default output files.
pub const OUTPUT_DIR_ENV: &str = "EPR_AMP_OUTPUT_DIR";

/// Largest model/oracle deviation accepted by `compare`.
pub const COMPARE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(
    name = "epr-amp",
    version,
    about = "Quantum correlations from local amplitudes, checked against state-vector quantum mechanics"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Default, Clone, Args)]
pub struct CommonArgs {
    /// Output file (CSV)
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Also write an SVG plot next to the CSV
    #[arg(long, global = true)]
    pub plot: bool,

    /// Random seed for sampling
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Grid points / samples
    #[arg(long, global = true)]
    pub points: Option<usize>,

    /// Interpret angles as radians instead of degrees
    #[arg(long, global = true)]
    pub radians: bool,

    /// Key-value configuration file; command-line flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum System {
    Singlet,
    Photon,
    Interference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairSystem {
    Singlet,
    Photon,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate U, P and the joint probabilities over a range of settings
    Scan {
        #[arg(long, value_enum, default_value = "singlet")]
        system: System,
        /// Range start (angle for singlet/photon, length for interference)
        #[arg(long, allow_negative_numbers = true)]
        start: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        stop: Option<f64>,
        #[command(flatten)]
        fringe: FringeArgs,
    },
    /// Compare model and oracle over a uniform grid of θ₁ − θ₂ in [0, 2π)
    Compare {
        #[arg(long, value_enum, default_value = "singlet")]
        system: PairSystem,
        /// Test hook: added to U on the model side
        #[arg(
            long,
            hide = true,
            default_value_t = 0.0,
            allow_negative_numbers = true
        )]
        perturb: f64,
    },
    /// CHSH values for the model, the deterministic bound and a lattice scan
    Chsh,
    /// The eight x-basis GHZ joint probabilities
    Ghz,
    /// Visibility of the two-photon position fringe
    Interference {
        #[command(flatten)]
        fringe: FringeArgs,
    },
    /// Monte Carlo coincidence counts for one pair of settings
    Sample {
        #[arg(long, value_enum, default_value = "singlet")]
        system: PairSystem,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta1: f64,
        #[arg(long, default_value_t = 60.0, allow_negative_numbers = true)]
        theta2: f64,
        #[arg(long)]
        events: Option<u64>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FringeArgs {
    /// Wave number
    #[arg(long)]
    pub k: Option<f64>,
    /// Angular scale factor
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Reference coordinate
    #[arg(long, allow_negative_numbers = true)]
    pub x0: Option<f64>,
}

/// Process-level inputs that do not come from argv.
#[derive(Debug, Clone, Default)]
pub struct Context {
    pub default_output_dir: Option<PathBuf>,
}

impl Context {
    pub fn from_env() -> Context {
        Context {
            default_output_dir: std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Domain { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(format!("I/O error: {e}"))
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// `key = value` lines; `#` starts a comment.
fn parse_config(text: &str) -> CliResult<HashMap<String, String>> {
    let mut map = HashMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("config line {}: expected key = value", n + 1))
        })?;
        let value = value.trim().trim_matches('"');
        map.insert(key.trim().to_string(), value.to_string());
    }
    Ok(map)
}

/// Flag values merged over the optional config file.
struct Settings {
    common: CommonArgs,
    file: HashMap<String, String>,
    ctx: Context,
}

impl Settings {
    fn load(common: CommonArgs, ctx: &Context) -> CliResult<Settings> {
        let file = match &common.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    CliError::Usage(format!("cannot read config {}: {e}", path.display()))
                })?;
                parse_config(&text)?
            }
            None => HashMap::new(),
        };
        Ok(Settings {
            common,
            file,
            ctx: ctx.clone(),
        })
    }

    fn file_value<T: std::str::FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        self.file
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::Usage(format!("config key {key}: cannot parse {v:?}")))
            })
            .transpose()
    }

    fn pick<T: std::str::FromStr>(&self, flag: Option<T>, key: &str, default: T) -> CliResult<T> {
        match flag {
            Some(v) => Ok(v),
            None => Ok(self.file_value(key)?.unwrap_or(default)),
        }
    }

    fn switch(&self, flag: bool, key: &str) -> CliResult<bool> {
        Ok(flag || self.file_value(key)?.unwrap_or(false))
    }

    fn points(&self, default: usize) -> CliResult<usize> {
        self.pick(self.common.points, "points", default)
    }

    fn seed(&self) -> CliResult<u64> {
        self.pick(self.common.seed, "seed", 0)
    }

    fn radians(&self) -> CliResult<bool> {
        self.switch(self.common.radians, "radians")
    }

    fn plot(&self) -> CliResult<bool> {
        self.switch(self.common.plot, "plot")
    }

    fn explicit_output(&self) -> CliResult<Option<PathBuf>> {
        match &self.common.output {
            Some(p) => Ok(Some(p.clone())),
            None => self.file_value("output"),
        }
    }

    /// Explicit output, or `default_name` inside the default output directory.
    fn output_or(&self, default_name: &str) -> CliResult<PathBuf> {
        Ok(match self.explicit_output()? {
            Some(p) => p,
            None => self
                .ctx
                .default_output_dir
                .clone()
                .unwrap_or_else(|| PathBuf::from("."))
                .join(default_name),
        })
    }

    fn fringe(&self, args: &FringeArgs) -> CliResult<InterferenceConfig> {
        let k = self.pick(args.k, "k", 1.0)?;
        let alpha = self.pick(args.alpha, "alpha", 1.0)?;
        let x0 = self.pick(args.x0, "x0", 0.0)?;
        Ok(InterferenceConfig::new(k, alpha)?.with_x0(x0)?)
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, ctx: &Context, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, ctx, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cli: Cli, ctx: &Context, out: &mut dyn Write) -> CliResult<i32> {
    let settings = Settings::load(cli.common, ctx)?;
    match cli.command {
        Command::Scan {
            system,
            start,
            stop,
            fringe,
        } => {
            let radians = settings.radians()?;
            let (default_start, default_stop) = default_range(system, radians);
            let req = ScanRequest {
                system,
                start: settings.pick(start, "start", default_start)?,
                stop: settings.pick(stop, "stop", default_stop)?,
                points: settings.points(361)?,
                output_path: settings.output_or(&format!("{}_scan.csv", system_name(system)))?,
                plot: settings.plot()?,
                radians,
                fringe: settings.fringe(&fringe)?,
            };
            cmd_scan(&req)?;
            writeln!(
                out,
                "wrote {} rows to {}",
                req.points,
                req.output_path.display()
            )?;
            Ok(EXIT_OK)
        }
        Command::Compare { system, perturb } => {
            let points = settings.points(360)?;
            cmd_compare(system, points, perturb, out)
        }
        Command::Chsh => {
            let points = settings.points(8)?;
            cmd_chsh(points, out)
        }
        Command::Ghz => cmd_ghz(settings.explicit_output()?.as_deref(), out),
        Command::Interference { fringe } => {
            let cfg = settings.fringe(&fringe)?;
            let samples = settings.points(256)?;
            cmd_interference(&cfg, samples, settings.explicit_output()?.as_deref(), out)
        }
        Command::Sample {
            system,
            theta1,
            theta2,
            events,
        } => {
            let to_rad = angle_converter(settings.radians()?);
            let config = match system {
                PairSystem::Singlet => PairConfig::singlet(to_rad(theta1), to_rad(theta2)),
                PairSystem::Photon => PairConfig::photon(to_rad(theta1), to_rad(theta2)),
            };
            let config = PairConfig::new(config.spin, config.phi0, config.theta1, config.theta2)?;
            let events = settings.pick(events, "events", 1_000_000)?;
            let run = SamplerRun::new(config, events, settings.seed()?)?;
            cmd_sample(&run, settings.explicit_output()?.as_deref(), out)
        }
    }
}

fn system_name(system: System) -> &'static str {
    match system {
        System::Singlet => "singlet",
        System::Photon => "photon",
        System::Interference => "interference",
    }
}

fn default_range(system: System, radians: bool) -> (f64, f64) {
    let full = if radians { 2.0 * PI } else { 360.0 };
    match system {
        System::Singlet => (0.0, full),
        System::Photon => (0.0, full / 2.0),
        System::Interference => (-10.0, 10.0),
    }
}

fn angle_converter(radians: bool) -> fn(f64) -> f64 {
    if radians {
        |x| x
    } else {
        f64::to_radians
    }
}

/// A validated `scan` invocation.
#[derive(Debug, Clone)]
pub struct ScanRequest {
    pub system: System,
    /// Range of `θ₁ − θ₂` (degrees unless `radians`), or of `x₁ − x₂` for
    /// interference.
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub output_path: PathBuf,
    pub plot: bool,
    pub radians: bool,
    /// Only used by the interference system.
    pub fringe: InterferenceConfig,
}

impl ScanRequest {
    pub fn validate(&self) -> crate::Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidArgument(format!(
                "scan needs at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return Err(Error::InvalidArgument(format!(
                "scan range must satisfy start < stop, got {}..{}",
                self.start, self.stop
            )));
        }
        Ok(())
    }

    /// The `points` grid values, both ends included.
    pub fn grid(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.points - 1) as f64;
        (0..self.points)
            .map(|j| {
                if j + 1 == self.points {
                    self.stop
                } else {
                    self.start + j as f64 * step
                }
            })
            .collect()
    }
}

pub const PAIR_SCAN_HEADER: &str = "x,u,p,p_pp,p_mm,p_pm,p_mp";
pub const INTERFERENCE_SCAN_HEADER: &str = "x1_minus_x2,prob";

/// Writes the scan CSV (and the SVG plot when requested).
pub fn cmd_scan(req: &ScanRequest) -> crate::Result<()> {
    req.validate()?;
    let grid = req.grid();
    let to_rad = angle_converter(req.radians);
    let mut csv = String::new();
    let mut curve = Vec::with_capacity(grid.len());
    match req.system {
        System::Singlet | System::Photon => {
            csv.push_str(PAIR_SCAN_HEADER);
            csv.push('\n');
            for &x in &grid {
                let d = match req.system {
                    System::Singlet => model::singlet_correlation(to_rad(x), 0.0),
                    _ => model::photon_correlation(to_rad(x), 0.0),
                };
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{},{}",
                    x, d.u, d.p, d.p_pp, d.p_mm, d.p_pm, d.p_mp
                );
                curve.push((x, d.p));
            }
        }
        System::Interference => {
            csv.push_str(INTERFERENCE_SCAN_HEADER);
            csv.push('\n');
            for &x in &grid {
                let p = interference::coincidence_probability(&req.fringe, x, 0.0);
                let _ = writeln!(csv, "{x},{p}");
                curve.push((x, p));
            }
        }
    }
    fs::write(&req.output_path, csv)?;
    if req.plot {
        let y_label = if req.system == System::Interference {
            "coincidence probability"
        } else {
            "P"
        };
        let svg = svg_plot(&curve, system_name(req.system), y_label);
        fs::write(req.output_path.with_extension("svg"), svg)?;
    }
    Ok(())
}

/// Minimal line plot with a frame and min/max labels.
pub fn svg_plot(curve: &[(f64, f64)], title: &str, y_label: &str) -> String {
    const W: f64 = 640.0;
    const H: f64 = 400.0;
    const M: f64 = 50.0;
    let (x_min, x_max) = bounds(curve.iter().map(|c| c.0));
    let (y_min, y_max) = bounds(curve.iter().map(|c| c.1));
    let sx = |x: f64| M + (x - x_min) / (x_max - x_min).max(f64::MIN_POSITIVE) * (W - 2.0 * M);
    let sy = |y: f64| H - M - (y - y_min) / (y_max - y_min).max(1e-12) * (H - 2.0 * M);
    let points: Vec<String> = curve
        .iter()
        .map(|&(x, y)| format!("{:.3},{:.3}", sx(x), sy(y)))
        .collect();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="{M}" y="{M}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        W - 2.0 * M,
        H - 2.0 * M
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="30" text-anchor="middle">{title}</text>"#,
        W / 2.0
    );
    let _ = writeln!(svg, r#"<text x="5" y="{}">{y_max:.3}</text>"#, M + 5.0);
    let _ = writeln!(svg, r#"<text x="5" y="{}">{y_min:.3}</text>"#, H - M);
    let _ = writeln!(
        svg,
        r#"<text x="{M}" y="{}">{x_min:.3}</text>"#,
        H - M + 20.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end">{x_max:.3}</text>"#,
        W - M,
        H - M + 20.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="5" y="{}" font-size="12">{y_label}</text>"#,
        H / 2.0
    );
    let _ = writeln!(
        svg,
        r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
        points.join(" ")
    );
    svg.push_str("</svg>\n");
    svg
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn oracle_setting(system: PairSystem, angle: f64) -> MeasurementSetting {
    match system {
        PairSystem::Singlet => MeasurementSetting::spin_half(angle),
        PairSystem::Photon => MeasurementSetting::photon(angle),
    }
}

fn model_distribution(
    system: PairSystem,
    theta1: f64,
    theta2: f64,
    perturb: f64,
) -> crate::Result<JointDistribution> {
    let config = match system {
        PairSystem::Singlet => PairConfig::singlet(theta1, theta2),
        PairSystem::Photon => PairConfig::photon(theta1, theta2),
    };
    let u = model::amplitude_correlation(&config);
    if perturb == 0.0 {
        return model::joint_probabilities(u);
    }
    model::joint_probabilities((u + perturb).clamp(-1.0, 1.0))
}

/// Largest absolute difference between model and oracle (`P` and the four
/// joint probabilities) over `θ₁ − θ₂ = 2πj/points`, `θ₂ = 0`.
pub fn max_model_oracle_deviation(
    system: PairSystem,
    points: usize,
    perturb: f64,
) -> crate::Result<f64> {
    if points == 0 {
        return Err(Error::InvalidArgument(
            "compare needs at least 1 grid point".into(),
        ));
    }
    let state = oracle::singlet_state();
    let mut worst: f64 = 0.0;
    for j in 0..points {
        let theta1 = 2.0 * PI * j as f64 / points as f64;
        let theta2 = 0.0;
        let d = model_distribution(system, theta1, theta2, perturb)?;
        let settings = [
            oracle_setting(system, theta1),
            oracle_setting(system, theta2),
        ];
        worst = worst.max((d.p - oracle::correlation(&state, settings)?).abs());
        for a in Sign::BOTH {
            for b in Sign::BOTH {
                let q = oracle::joint_probability(&state, &settings, &[a, b])?;
                worst = worst.max((d.probability(a, b) - q).abs());
            }
        }
    }
    Ok(worst)
}

fn cmd_compare(
    system: PairSystem,
    points: usize,
    perturb: f64,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let worst = max_model_oracle_deviation(system, points, perturb)?;
    let ok = worst <= COMPARE_TOLERANCE;
    writeln!(
        out,
        "system: {}",
        if system == PairSystem::Singlet {
            "singlet"
        } else {
            "photon"
        }
    )?;
    writeln!(out, "grid points: {points}")?;
    writeln!(out, "max abs deviation: {worst:e}")?;
    writeln!(out, "tolerance: {COMPARE_TOLERANCE:e}")?;
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_chsh(points: usize, out: &mut dyn Write) -> CliResult<i32> {
    let singlet = |x: f64, y: f64| model::singlet_correlation(x, y).p;
    let photon = |x: f64, y: f64| model::photon_correlation(x, y).p;
    let s_singlet = bell::chsh_value(singlet, &ChshSettings::singlet_optimal())?;
    let s_photon = bell::chsh_value(photon, &ChshSettings::photon_optimal())?;
    let deterministic = bell::max_deterministic_chsh();
    let scan = bell::scan_chsh(singlet, points)?;
    let best = bell::max_abs(&scan).expect("non-empty scan");
    writeln!(out, "singlet model S at (0, 90, 45, 135) deg: {s_singlet}")?;
    writeln!(out, "photon model S at (0, 45, 22.5, 67.5) deg: {s_photon}")?;
    writeln!(
        out,
        "Tsirelson bound 2*sqrt(2): {}",
        2.0 * std::f64::consts::SQRT_2
    )?;
    writeln!(
        out,
        "deterministic instruction sets max |S|: {deterministic}"
    )?;
    let st = best.settings;
    writeln!(
        out,
        "singlet grid max |S| ({points} points per angle): {} at ({}, {}, {}, {}) deg",
        best.s.abs(),
        st.a.to_degrees(),
        st.a_prime.to_degrees(),
        st.b.to_degrees(),
        st.b_prime.to_degrees()
    )?;
    Ok(EXIT_OK)
}

pub const GHZ_HEADER: &str = "s1,s2,s3,probability,normalized,oracle";

fn cmd_ghz(output: Option<&Path>, out: &mut dyn Write) -> CliResult<i32> {
    let phases = ghz::default_phases();
    let table = ghz::ghz_table(&phases);
    let normalized = ghz::normalized_distribution(&phases);
    let state = oracle::ghz_state();
    let xs = [MeasurementSetting::x_axis(); 3];
    let mut csv = String::from(GHZ_HEADER);
    csv.push('\n');
    let mut worst: f64 = 0.0;
    for ((o, p), (_, q)) in table.iter().zip(normalized.iter()) {
        let born = oracle::joint_probability(&state, &xs, &o.signs())?;
        worst = worst.max((q - born).abs());
        let _ = writeln!(csv, "{},{},{},{},{},{}", o.s1, o.s2, o.s3, p, q, born);
    }
    out.write_all(csv.as_bytes())?;
    if let Some(path) = output {
        write_file(path, csv.as_bytes())?;
    }
    if worst > COMPARE_TOLERANCE {
        return Err(CliError::Failure(format!(
            "GHZ table deviates from the oracle by {worst:e}"
        )));
    }
    Ok(EXIT_OK)
}

fn cmd_interference(
    cfg: &InterferenceConfig,
    samples: usize,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let v = interference::visibility(cfg, samples)?;
    writeln!(out, "k: {}", cfg.k())?;
    writeln!(out, "alpha: {}", cfg.alpha())?;
    writeln!(out, "x0: {}", cfg.x0())?;
    writeln!(out, "fringe period: {}", cfg.fringe_period())?;
    writeln!(out, "samples: {samples}")?;
    writeln!(out, "visibility: {v}")?;
    if let Some(path) = output {
        let mut csv = String::from(INTERFERENCE_SCAN_HEADER);
        csv.push('\n');
        for (dx, p) in interference::fringe_scan(cfg, samples, 0.0)? {
            let _ = writeln!(csv, "{dx},{p}");
        }
        write_file(path, csv.as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn cmd_sample(run: &SamplerRun, output: Option<&Path>, out: &mut dyn Write) -> CliResult<i32> {
    let counts = sampler::sample_events(run);
    let estimate = sampler::estimate_correlation(&counts)?;
    let analytic = model::correlate(run.config()).p;
    let c = run.config();
    writeln!(out, "spin: {}", c.spin)?;
    writeln!(out, "phi0: {}", c.phi0)?;
    writeln!(out, "theta1: {}", c.theta1)?;
    writeln!(out, "theta2: {}", c.theta2)?;
    writeln!(out, "events: {}", run.n_events())?;
    writeln!(out, "seed: {}", run.seed())?;
    writeln!(out, "n_pp: {}", counts.n_pp)?;
    writeln!(out, "n_mm: {}", counts.n_mm)?;
    writeln!(out, "n_pm: {}", counts.n_pm)?;
    writeln!(out, "n_mp: {}", counts.n_mp)?;
    writeln!(out, "estimated P: {estimate}")?;
    writeln!(out, "analytic P: {analytic}")?;
    if let Some(path) = output {
        let mut w = BufWriter::new(File::create(path)?);
        counts.write_csv(&mut w)?;
        w.flush()?;
    }
    Ok(EXIT_OK)
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes)
        .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display())))
}
