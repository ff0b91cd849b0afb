//! The `hypercone` command line: parsing, subcommands and file output.

pub mod input;
pub mod parse;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hypercone::arrangement::{chambers, general_position, zaslavsky_central, Chamber};
use hypercone::constructions;
use hypercone::hyperbolicity::{
    count_cones, count_cones_linear_product, is_hyperbolic_structured, HyperbolicityConfig, HyperbolicityStatus,
};
use hypercone::improj::{
    components, limit_directions, membership_structured, raster_structured, recession_correspondence,
    verify_homogenization, ComponentConfig, ComponentReport, HomogenizationConfig, MembershipConfig, MembershipValue,
    Mode, RasterBox,
};
use hypercone::StructuredPoly;
use serde::Serialize;

pub use parse::{parse_poly, parse_poly_n, parse_structured, serialize, serialize_structured, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] hypercone::Error),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Parse(_) => "parse",
            CliError::Core(_) => "computation",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hypercone", version, about = "Hyperbolicity cones and imaginary projections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct PolyArgs {
    /// Polynomial text, or @file.
    #[arg(short = 'p', long = "poly", allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Number of variables, when more than the highest index mentioned.
    #[arg(long)]
    pub nvars: Option<usize>,
    /// Hermitian pencil as JSON (array of matrices), or @file.
    #[arg(long)]
    pub pencil: Option<String>,
    /// Real linear forms as JSON (array of coefficient arrays), or @file.
    #[arg(long)]
    pub forms: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Exact,
    Numeric,
    Auto,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Numeric => Mode::Numeric,
            ModeArg::Auto => Mode::Auto,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test hyperbolicity in a direction.
    Hyperbolic {
        #[command(flatten)]
        input: PolyArgs,
        /// Direction as comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        dir: String,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Count hyperbolicity cones.
    Cones {
        #[command(flatten)]
        input: PolyArgs,
    },
    /// Decide whether a point lies in the imaginary projection.
    Member {
        #[command(flatten)]
        input: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rasterize a bivariate imaginary projection and analyse its complement.
    Raster {
        #[command(flatten)]
        input: PolyArgs,
        /// x_min,x_max,y_min,y_max
        #[arg(long = "box", allow_hyphen_values = true)]
        bbox: String,
        #[arg(long, default_value_t = 512)]
        res: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        /// Longest straight boundary run, in pixels, still counted as strictly convex.
        #[arg(long)]
        segment_tol: Option<f64>,
    },
    /// Limit directions of a bivariate imaginary projection.
    Limits {
        #[command(flatten)]
        input: PolyArgs,
    },
    /// Chambers of a central hyperplane arrangement.
    Arrange {
        #[arg(long)]
        forms: String,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// List or build named constructions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the correspondences between f, its homogenization and its initial form.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Build {
        name: String,
        /// Parameters as key=value.
        params: Vec<String>,
        /// Print the whole entry as JSON instead of the polynomial.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCheck {
    Homogenization {
        #[command(flatten)]
        input: PolyArgs,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Recession {
        #[command(flatten)]
        input: PolyArgs,
        #[arg(long = "box", allow_hyphen_values = true, default_value = "-4,4,-4,4")]
        bbox: String,
        #[arg(long, default_value_t = 512)]
        res: usize,
    },
}

/// What a finished invocation prints and returns.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn ok<T: Serialize>(v: &T, code: i32) -> Result<Outcome, CliError> {
    Ok(Outcome { code, stdout: to_json(v), stderr: String::new() })
}

fn structured(a: &PolyArgs) -> Result<StructuredPoly, CliError> {
    let given = [a.poly.is_some(), a.pencil.is_some(), a.forms.is_some()].iter().filter(|&&b| b).count();
    if given != 1 {
        return Err(CliError::Usage("give exactly one of --poly, --pencil, --forms".into()));
    }
    if let Some(p) = &a.poly {
        return Ok(parse_structured(&input::resolve(p)?, a.nvars)?);
    }
    if let Some(p) = &a.pencil {
        return Ok(StructuredPoly::pencil(input::pencil(&input::resolve(p)?)?)?);
    }
    let fs = input::forms(&input::resolve(a.forms.as_deref().expect("checked"))?)?;
    Ok(StructuredPoly::linear_forms(fs))
}

#[derive(Serialize)]
struct MemberOutput {
    point: Vec<String>,
    value: MembershipValue,
    method: hypercone::improj::MembershipMethod,
}

#[derive(Serialize)]
struct RasterOutput<'a> {
    res: usize,
    #[serde(rename = "box")]
    bbox: &'a RasterBox,
    inside: usize,
    outside: usize,
    unknown: usize,
    saddles: usize,
    total: usize,
    bounded: usize,
    unbounded: usize,
    components: &'a ComponentReport,
}

#[derive(Serialize)]
struct ArrangeOutput<'a> {
    n: usize,
    forms: usize,
    general_position: bool,
    count: usize,
    zaslavsky: u128,
    chambers: &'a [Chamber],
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn execute(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Hyperbolic { input: a, dir, samples, seed } => {
            let f = structured(&a)?;
            let e = input::rationals(&dir)?;
            let v = is_hyperbolic_structured(&f, &e, &HyperbolicityConfig { samples, seed })?;
            let code = if v.status == HyperbolicityStatus::NotHyperbolic { 1 } else { 0 };
            ok(&v, code)
        }
        Command::Cones { input: a } => {
            let r = match &a.forms {
                Some(t) if a.poly.is_none() && a.pencil.is_none() => {
                    count_cones_linear_product(&input::forms(&input::resolve(t)?)?)
                }
                _ => count_cones(&structured(&a)?)?,
            };
            ok(&r, 0)
        }
        Command::Member { input: a, point, mode, seed } => {
            let f = structured(&a)?;
            let y = input::rationals(&point)?;
            let cfg = MembershipConfig { mode: mode.into(), seed, ..Default::default() };
            let m = membership_structured(&f, &y, &cfg)?;
            let code = match m.value {
                MembershipValue::Outside => 0,
                MembershipValue::Inside => 1,
                MembershipValue::Unknown => 3,
            };
            let out =
                MemberOutput { point: y.iter().map(|x| x.to_string()).collect(), value: m.value, method: m.method };
            ok(&out, code)
        }
        Command::Raster { input: a, bbox, res, out, report, mode, segment_tol } => {
            let f = structured(&a)?;
            let bbox = input::raster_box(&bbox)?;
            let grid = raster_structured(&f, &bbox, res, &MembershipConfig::with_mode(mode.into()))?;
            let ccfg = ComponentConfig { segment_tol, ..Default::default() };
            let rep = components(&grid, &ccfg);
            if let Some(p) = &out {
                write_file(p, &grid.to_pgm())?;
            }
            use hypercone::improj::Cell;
            let o = RasterOutput {
                res,
                bbox: &bbox,
                inside: grid.count(Cell::Inside),
                outside: grid.count(Cell::Outside),
                unknown: grid.count(Cell::Unknown),
                saddles: grid.saddles.len(),
                total: rep.total,
                bounded: rep.bounded,
                unbounded: rep.unbounded,
                components: &rep,
            };
            let text = to_json(&o);
            if let Some(p) = &report {
                write_file(p, text.as_bytes())?;
            }
            Ok(Outcome { code: 0, stdout: text, stderr: String::new() })
        }
        Command::Limits { input: a } => {
            let f = structured(&a)?;
            ok(&limit_directions(f.poly())?, 0)
        }
        Command::Arrange { forms, csv } => {
            let fs = input::forms(&input::resolve(&forms)?)?;
            let ch = chambers(&fs);
            if let Some(p) = &csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                let mut header = vec!["chamber".to_string(), "signs".to_string()];
                header.extend((1..=fs.dim()).map(|j| format!("w{j}")));
                let io = |e: csv::Error| CliError::Io(e.to_string());
                w.write_record(&header).map_err(io)?;
                for (k, c) in ch.iter().enumerate() {
                    let mut rec = vec![k.to_string(), c.sign_string()];
                    rec.extend(c.witness.iter().map(|x| x.to_string()));
                    w.write_record(&rec).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
                write_file(p, &bytes)?;
            }
            let o = ArrangeOutput {
                n: fs.dim(),
                forms: fs.len(),
                general_position: general_position(&fs),
                count: ch.len(),
                zaslavsky: zaslavsky_central(fs.dim(), fs.len()),
                chambers: &ch,
            };
            ok(&o, 0)
        }
        Command::Catalog { action: CatalogAction::List } => ok(&constructions::catalog(), 0),
        Command::Catalog { action: CatalogAction::Build { name, params, json } } => {
            let mut args = BTreeMap::new();
            for p in &params {
                let (k, v) =
                    p.split_once('=').ok_or_else(|| CliError::Usage(format!("expected key=value, got {p:?}")))?;
                args.insert(k.trim().to_string(), v.trim().to_string());
            }
            let e = constructions::build(&name, &args)?;
            if json {
                ok(&e, 0)
            } else {
                Ok(Outcome {
                    code: 0,
                    stdout: format!("{}\n", serialize_structured(&e.structured)),
                    stderr: String::new(),
                })
            }
        }
        Command::Verify { check: VerifyCheck::Homogenization { input: a, samples, seed } } => {
            let f = structured(&a)?;
            let cfg = HomogenizationConfig { samples, seed, ..Default::default() };
            let r = verify_homogenization(f.poly(), &cfg)?;
            let code = if r.contradictions > 0 { 1 } else { 0 };
            ok(&r, code)
        }
        Command::Verify { check: VerifyCheck::Recession { input: a, bbox, res } } => {
            let f = structured(&a)?;
            let bbox = input::raster_box(&bbox)?;
            let r = recession_correspondence(
                f.poly(),
                &bbox,
                res,
                &MembershipConfig::default(),
                &ComponentConfig::default(),
            )?;
            ok(&r, 0)
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorOutput<'a> {
    error: ErrorBody<'a>,
}

/// Limit rayon to `HYPERCONE_THREADS` threads when set.
pub fn init_threads() {
    if let Some(n) = std::env::var("HYPERCONE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Run one invocation given the full argument list (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            let body = ErrorOutput { error: ErrorBody { kind: "usage", message: e.to_string().trim().to_string() } };
            return Outcome { code: 2, stdout: String::new(), stderr: to_json(&body) };
        }
    };
    match execute(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let body = ErrorOutput { error: ErrorBody { kind: e.kind(), message: e.to_string() } };
            Outcome { code: 2, stdout: String::new(), stderr: to_json(&body) }
        }
    }
}
