//! The `mchroma` command-line front end.
//!
//! Every subcommand writes one JSON document (or an SVG file for
//! `render`). Exit codes: 0 pass, 1 verification failure, 2 usage error,
//! 3 I/O error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{SchemeError, SearchError};
use crate::scheme::{default_choice, ColoringScheme, HexagonChoice, HexagonKind, SchemeDocument, SUPPORTED_N};
use crate::search::{self, Parameterization};
use crate::svg::{self, Overlay, RenderOptions};
use crate::szlam;
use crate::verify::{self, LineRegression, PackingReport, SamplingReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// JSON schemas for the documents the CLI writes.
pub mod schemas {
    pub const SCHEME: &str = include_str!("../schema/scheme.schema.json");
    pub const VERIFY: &str = include_str!("../schema/verify-report.schema.json");
    pub const SAMPLING: &str = include_str!("../schema/sampling-report.schema.json");
    pub const SEARCH: &str = include_str!("../schema/feasibility-report.schema.json");
    pub const CERTIFY: &str = include_str!("../schema/certify-report.schema.json");
    pub const SZLAM: &str = include_str!("../schema/szlam-report.schema.json");
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

/// Hexagon overrides as given on the command line or in a config file.
/// At most one of `ratio`, `vertex_index`, `arc`, `midpoint` may be set.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ChoiceOverride {
    pub ratio: Option<f64>,
    pub side: Option<usize>,
    pub vertex_index: Option<usize>,
    pub arc: Option<f64>,
    pub midpoint: bool,
    pub shared_side: Option<usize>,
}

impl ChoiceOverride {
    fn is_empty(&self) -> bool {
        *self == ChoiceOverride::default()
    }

    /// Side used when only a ratio is given: the default's side if it is a
    /// side split, otherwise side 2.
    fn default_side(n: usize) -> usize {
        match default_choice(n) {
            Some((HexagonChoice { kind: HexagonKind::SideSplit { side, .. }, .. }, _)) => side,
            _ => 2,
        }
    }

    pub fn resolve(&self, n: usize) -> Result<Option<HexagonChoice>, CliError> {
        if self.is_empty() {
            return Ok(None);
        }
        let given = [self.ratio.is_some(), self.vertex_index.is_some(), self.arc.is_some(), self.midpoint];
        if given.iter().filter(|&&g| g).count() > 1 {
            return Err(CliError::Usage("give at most one of ratio, vertex-index, arc, midpoint".into()));
        }
        if self.side.is_some() && self.ratio.is_none() {
            return Err(CliError::Usage("side needs a ratio".into()));
        }
        let kind = if let Some(ratio) = self.ratio {
            HexagonKind::SideSplit { side: self.side.unwrap_or_else(|| Self::default_side(n)), ratio }
        } else if let Some(index) = self.vertex_index {
            HexagonKind::VertexIndex { index }
        } else if let Some(t) = self.arc {
            HexagonKind::ArcPosition { t }
        } else if self.midpoint {
            HexagonKind::BoundaryMidpoint
        } else {
            match default_choice(n) {
                Some((c, _)) => c.kind,
                None => return Err(CliError::Usage(format!("n = {n} has no default hexagon; choose one"))),
            }
        };
        let mut choice = HexagonChoice::canonical(n, kind);
        if let Some(k) = self.shared_side {
            choice.shared_side_index = k;
        }
        Ok(Some(choice))
    }
}

/// Settings shared by all subcommands, loadable from a `key = value` file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: usize,
    pub choice: ChoiceOverride,
    pub allow_experimental: bool,
    pub samples: u64,
    pub seed: u64,
    pub threads: Option<usize>,
    pub output: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub viewport: [f64; 4],
    pub scale: f64,
    pub palette: [String; 6],
    pub overlays: Vec<Overlay>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let r = RenderOptions::default();
        Self {
            n: 12,
            choice: ChoiceOverride::default(),
            allow_experimental: false,
            samples: 100_000,
            seed: 42,
            threads: None,
            output: None,
            csv: None,
            viewport: r.viewport,
            scale: r.scale,
            palette: r.palette,
            overlays: r.overlays,
        }
    }
}

fn parse_value<T: FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| CliError::Usage(format!("bad value for {key}: {v:?}")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool, CliError> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::Usage(format!("bad value for {key}: {v:?}"))),
    }
}

impl RunConfig {
    /// Parse `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut c = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", lineno + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "n" => c.n = parse_value(k, v)?,
                "ratio" => c.choice.ratio = Some(parse_value(k, v)?),
                "side" => c.choice.side = Some(parse_value(k, v)?),
                "vertex_index" => c.choice.vertex_index = Some(parse_value(k, v)?),
                "arc" => c.choice.arc = Some(parse_value(k, v)?),
                "midpoint" => c.choice.midpoint = parse_bool(k, v)?,
                "shared_side" => c.choice.shared_side = Some(parse_value(k, v)?),
                "allow_experimental" => c.allow_experimental = parse_bool(k, v)?,
                "samples" => c.samples = parse_value(k, v)?,
                "seed" => c.seed = parse_value(k, v)?,
                "threads" => c.threads = Some(parse_value(k, v)?),
                "output" => c.output = Some(PathBuf::from(v)),
                "csv" => c.csv = Some(PathBuf::from(v)),
                "viewport" => {
                    let xs: Vec<f64> = v.split_whitespace().map(|s| parse_value(k, s)).collect::<Result<_, _>>()?;
                    c.viewport = xs
                        .try_into()
                        .map_err(|_| CliError::Usage("viewport needs four numbers x0 y0 x1 y1".into()))?;
                }
                "scale" => c.scale = parse_value(k, v)?,
                "palette" => {
                    let xs: Vec<String> = v.split(',').map(|s| s.trim().to_string()).collect();
                    c.palette =
                        xs.try_into().map_err(|_| CliError::Usage("palette needs six comma-separated colors".into()))?;
                }
                "overlays" => {
                    c.overlays = v
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(|s| s.parse().map_err(CliError::Usage))
                        .collect::<Result<_, _>>()?;
                }
                _ => return Err(CliError::Usage(format!("config line {}: unknown key {k:?}", lineno + 1))),
            }
        }
        Ok(c)
    }

    /// Inverse of [`RunConfig::parse`]. Floats use the shortest
    /// representation that round-trips.
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n = {}", self.n);
        let ch = &self.choice;
        if let Some(v) = ch.ratio {
            let _ = writeln!(s, "ratio = {v:?}");
        }
        if let Some(v) = ch.side {
            let _ = writeln!(s, "side = {v}");
        }
        if let Some(v) = ch.vertex_index {
            let _ = writeln!(s, "vertex_index = {v}");
        }
        if let Some(v) = ch.arc {
            let _ = writeln!(s, "arc = {v:?}");
        }
        if ch.midpoint {
            let _ = writeln!(s, "midpoint = true");
        }
        if let Some(v) = ch.shared_side {
            let _ = writeln!(s, "shared_side = {v}");
        }
        let _ = writeln!(s, "allow_experimental = {}", self.allow_experimental);
        let _ = writeln!(s, "samples = {}", self.samples);
        let _ = writeln!(s, "seed = {}", self.seed);
        if let Some(v) = self.threads {
            let _ = writeln!(s, "threads = {v}");
        }
        if let Some(p) = &self.output {
            let _ = writeln!(s, "output = {}", p.display());
        }
        if let Some(p) = &self.csv {
            let _ = writeln!(s, "csv = {}", p.display());
        }
        let [a, b, c, d] = self.viewport;
        let _ = writeln!(s, "viewport = {a:?} {b:?} {c:?} {d:?}");
        let _ = writeln!(s, "scale = {:?}", self.scale);
        let _ = writeln!(s, "palette = {}", self.palette.join(","));
        let ov: Vec<&str> = self
            .overlays
            .iter()
            .map(|o| match o {
                Overlay::Sums => "sums",
                Overlay::Lines => "lines",
                Overlay::Lattice => "lattice",
            })
            .collect();
        let _ = writeln!(s, "overlays = {}", ov.join(","));
        s
    }

    pub fn render_options(&self) -> RenderOptions {
        RenderOptions {
            viewport: self.viewport,
            scale: self.scale,
            palette: self.palette.clone(),
            overlays: self.overlays.clone(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mchroma", version, about = "Regular proper 6-colorings of regular-polygon Minkowski planes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a scheme and print it as JSON.
    Construct(CommonArgs),
    /// Packing certificate, separating lines, Monte Carlo and boundary suite.
    Verify(CommonArgs),
    /// Monte Carlo unit-pair sampling only.
    Sample(CommonArgs),
    /// Draw the tiling as SVG.
    Render(RenderArgs),
    /// Scan a hexagon family for feasibility, or certify the defaults.
    Search(SearchArgs),
    /// Red–blue coloring and forbidden configuration of a scheme.
    Szlam(CommonArgs),
}

#[derive(Debug, Args, Default)]
pub struct CommonArgs {
    /// Number of vertices of the unit circle.
    #[arg(long)]
    pub n: Option<usize>,
    /// Split ratio on a side of the arc A2..A6.
    #[arg(long)]
    pub ratio: Option<f64>,
    /// Arc side for --ratio.
    #[arg(long)]
    pub side: Option<usize>,
    /// Interior arc vertex used as A1.
    #[arg(long)]
    pub vertex_index: Option<usize>,
    /// Arc-length position of A1 in (0, 1).
    #[arg(long)]
    pub arc: Option<f64>,
    /// Put A1 halfway along the arc.
    #[arg(long)]
    pub midpoint: bool,
    /// Side of C/2 that becomes A3A2.
    #[arg(long)]
    pub shared_side: Option<usize>,
    /// Allow even n outside 8..=22.
    #[arg(long)]
    pub allow_experimental: bool,
    /// Load the scheme from a JSON file instead of building it.
    #[arg(long, value_name = "PATH")]
    pub scheme: Option<PathBuf>,
    /// Monte Carlo sample count (default 100000)
    #[arg(long)]
    pub samples: Option<u64>,
    /// RNG seed (default 42)
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads (default: all available).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Write the result here instead of stdout
    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// `key = value` config file; flags override it.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Drawn region (default -6 -6 6 6)
    #[arg(long, num_args = 4, value_names = ["X0", "Y0", "X1", "Y1"], allow_negative_numbers = true)]
    pub viewport: Option<Vec<f64>>,
    /// Pixels per unit.
    #[arg(long)]
    pub scale: Option<f64>,
    /// Extra layers: sums, lines, lattice. Repeatable.
    #[arg(long)]
    pub overlay: Vec<Overlay>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParamKind {
    Arc,
    Ratio,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Family to scan: arc position of A1, or split ratio on --side
    #[arg(long, value_enum, default_value = "arc")]
    pub param: ParamKind,
    /// Grid points in the scan
    #[arg(long, default_value_t = 512)]
    pub grid: usize,
    /// Also write (t, clearance) pairs as CSV.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Certify the defaults for n = 14, 16, 18, 20 instead of scanning.
    #[arg(long)]
    pub certify: bool,
}

impl clap::ValueEnum for Overlay {
    fn value_variants<'a>() -> &'a [Self] {
        &[Overlay::Sums, Overlay::Lines, Overlay::Lattice]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            Overlay::Sums => "sums",
            Overlay::Lines => "lines",
            Overlay::Lattice => "lattice",
        }))
    }
}

fn load_config(args: &CommonArgs) -> Result<RunConfig, CliError> {
    let mut c = match &args.config {
        Some(p) => RunConfig::parse(&std::fs::read_to_string(p).map_err(|e| io_err(p, e))?)?,
        None => RunConfig::default(),
    };
    if let Some(n) = args.n {
        c.n = n;
    }
    let flag_choice = ChoiceOverride {
        ratio: args.ratio,
        side: args.side,
        vertex_index: args.vertex_index,
        arc: args.arc,
        midpoint: args.midpoint,
        shared_side: args.shared_side,
    };
    if !flag_choice.is_empty() {
        c.choice = flag_choice;
    }
    c.allow_experimental |= args.allow_experimental;
    if let Some(v) = args.samples {
        c.samples = v;
    }
    if let Some(v) = args.seed {
        c.seed = v;
    }
    if args.threads.is_some() {
        c.threads = args.threads;
    }
    if args.output.is_some() {
        c.output = args.output.clone();
    }
    Ok(c)
}

fn build_scheme(args: &CommonArgs, cfg: &RunConfig) -> Result<ColoringScheme, CliError> {
    if let Some(p) = &args.scheme {
        let text = std::fs::read_to_string(p).map_err(|e| io_err(p, e))?;
        let doc: SchemeDocument =
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?;
        return Ok(ColoringScheme::from_document(&doc)?);
    }
    let n = cfg.n;
    if n % 2 != 0 || n < 6 {
        return Err(CliError::Usage(format!("n = {n} is not an even number >= 6")));
    }
    let choice = cfg.choice.resolve(n)?;
    if SUPPORTED_N.contains(&n) {
        return Ok(ColoringScheme::build(n, choice)?);
    }
    if !cfg.allow_experimental {
        return Err(CliError::Usage(format!(
            "n = {n} is outside 8..=22; pass --allow-experimental and a hexagon choice"
        )));
    }
    let choice = choice.ok_or_else(|| CliError::Usage(format!("n = {n} needs an explicit hexagon choice")))?;
    Ok(ColoringScheme::build_experimental(n, choice)?)
}

fn emit(cfg: &RunConfig, body: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match &cfg.output {
        Some(p) => std::fs::write(p, body).map_err(|e| io_err(p, e)),
        None => out.write_all(body.as_bytes()).map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Everything `verify` runs, with the overall verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scheme_id: String,
    pub packing: PackingReport,
    pub regression: Vec<LineRegression>,
    pub sampling: SamplingReport,
    pub adversarial: SamplingReport,
    /// Targeted pairs near overlapping same-color tiles; empty when the
    /// packing certificate passes.
    pub contact: SamplingReport,
    pub failed_sections: Vec<String>,
    pub pass: bool,
}

pub fn verify_scheme(scheme: &ColoringScheme, samples: u64, seed: u64) -> VerifyReport {
    let packing = verify::packing_certificate(scheme);
    let regression = verify::regression_lines(scheme);
    let sampling = verify::sample_unit_pairs(scheme, samples, seed);
    let adversarial = verify::adversarial_boundary_pairs(scheme);
    let contact = verify::sample_contact_pairs(scheme, samples, seed);
    let mut failed_sections = Vec::new();
    if !packing.pass {
        failed_sections.push("packing".to_string());
    }
    if regression.iter().any(|r| !r.check.separates) {
        failed_sections.push("regression".to_string());
    }
    if !sampling.pass {
        failed_sections.push("sampling".to_string());
    }
    if !adversarial.pass {
        failed_sections.push("adversarial".to_string());
    }
    if !contact.pass {
        failed_sections.push("contact".to_string());
    }
    VerifyReport {
        scheme_id: scheme.id(),
        pass: failed_sections.is_empty(),
        packing,
        regression,
        sampling,
        adversarial,
        contact,
        failed_sections,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SzlamReport {
    pub scheme_id: String,
    pub configuration: szlam::Configuration,
    pub hits: szlam::HitReport,
    pub red_avoidance: szlam::UnitPairReport,
    pub round_trip: szlam::UnitPairReport,
    pub pass: bool,
}

pub fn szlam_report(scheme: ColoringScheme, samples: u64, seed: u64) -> SzlamReport {
    let scheme = Arc::new(scheme);
    let (rb, k) = szlam::to_red_blue(scheme.clone());
    let hits = szlam::check_translate_hits(&rb, &k, samples, seed, None);
    let red_avoidance = szlam::check_red_unit_avoidance(&rb, scheme.norm(), samples, seed, None);
    let derived = szlam::from_red_blue(rb, k.clone());
    let round_trip = szlam::check_derived_coloring(&derived, scheme.norm(), samples, seed, None);
    SzlamReport {
        scheme_id: scheme.id(),
        pass: hits.pass && red_avoidance.pass && round_trip.pass,
        configuration: k,
        hits,
        red_avoidance,
        round_trip,
    }
}

fn pass_code(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(CliError::Usage("threads must be at least 1".into())),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Construct(a) => {
            let cfg = load_config(&a)?;
            let scheme = build_scheme(&a, &cfg)?;
            emit(&cfg, &to_json(&scheme.to_document()), out)?;
            Ok(EXIT_PASS)
        }
        Command::Verify(a) => {
            let cfg = load_config(&a)?;
            let scheme = build_scheme(&a, &cfg)?;
            let start = Instant::now();
            let report = with_threads(cfg.threads, || verify_scheme(&scheme, cfg.samples, cfg.seed))?;
            let _ = writeln!(err, "verify {}: {:.2} s", report.scheme_id, start.elapsed().as_secs_f64());
            emit(&cfg, &to_json(&report), out)?;
            if !report.pass {
                let _ = writeln!(err, "verification failed: {}", report.failed_sections.join(", "));
            }
            Ok(pass_code(report.pass))
        }
        Command::Sample(a) => {
            let cfg = load_config(&a)?;
            let scheme = build_scheme(&a, &cfg)?;
            let report = with_threads(cfg.threads, || verify::sample_unit_pairs(&scheme, cfg.samples, cfg.seed))?;
            let _ = writeln!(err, "sample {}: {} pairs in {:.2} s", scheme.id(), report.n_samples, report.elapsed);
            emit(&cfg, &to_json(&report), out)?;
            if !report.pass {
                let _ = writeln!(err, "verification failed: sampling");
            }
            Ok(pass_code(report.pass))
        }
        Command::Render(a) => {
            let mut cfg = load_config(&a.common)?;
            if let Some(v) = a.viewport {
                cfg.viewport = v.try_into().expect("clap enforces four values");
            }
            if let Some(s) = a.scale {
                cfg.scale = s;
            }
            if !a.overlay.is_empty() {
                cfg.overlays = a.overlay;
            }
            let scheme = build_scheme(&a.common, &cfg)?;
            let svg = svg::render(&scheme, &cfg.render_options()).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&cfg, &svg, out)?;
            Ok(EXIT_PASS)
        }
        Command::Search(a) => {
            let cfg = load_config(&a.common)?;
            if a.certify {
                return match with_threads(cfg.threads, search::certify_defaults)? {
                    Ok(map) => {
                        emit(&cfg, &to_json(&map), out)?;
                        Ok(EXIT_PASS)
                    }
                    Err(e) => {
                        let _ = writeln!(err, "verification failed: {e}");
                        Ok(EXIT_FAIL)
                    }
                };
            }
            let n = cfg.n;
            if n % 2 != 0 || n < 6 {
                return Err(CliError::Usage(format!("n = {n} is not an even number >= 6")));
            }
            let param = match a.param {
                ParamKind::Arc => Parameterization::ArcPosition,
                ParamKind::Ratio => {
                    Parameterization::SideRatio { side: cfg.choice.side.unwrap_or_else(|| ChoiceOverride::default_side(n)) }
                }
            };
            let report = with_threads(cfg.threads, || search::scan(n, param, a.grid))?
                .map_err(|e: SearchError| CliError::Usage(e.to_string()))?;
            if let Some(p) = a.csv.as_ref().or(cfg.csv.as_ref()) {
                std::fs::write(p, report.to_csv()).map_err(|e| io_err(p, e))?;
            }
            emit(&cfg, &to_json(&report), out)?;
            Ok(EXIT_PASS)
        }
        Command::Szlam(a) => {
            let cfg = load_config(&a)?;
            let scheme = build_scheme(&a, &cfg)?;
            let report = with_threads(cfg.threads, || szlam_report(scheme, cfg.samples, cfg.seed))?;
            emit(&cfg, &to_json(&report), out)?;
            if !report.pass {
                let _ = writeln!(err, "verification failed: szlam");
            }
            Ok(pass_code(report.pass))
        }
    }
}

/// Run the CLI on `args` (including the program name) and return the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
