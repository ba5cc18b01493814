//! Command-line front end: `verify`, `tabulate`, `solve` and `eval`.
//!
//! Exit status: 0 on success or an all-pass verification, 1 when a
//! verification check fails, 2 on usage or input errors.
//!
//! Files are JSON. Numbers written by `solve` and `eval` carry 17 significant
//! digits, so every double survives a round trip.
//!
//! Solve config:
//!
//! ```json
//! {"d": 4, "kind": "annulus", "radii": [0.5, 2.0], "lmax": 3,
//!  "boundary": [{"radius": 0.5, "data": "harmonic:(1,0;0)"},
//!               {"radius": 2.0, "samples-file": "outer.json"}]}
//! ```
//!
//! A samples file holds `{"d", "lmax", "values": [[re, im], ...]}` with one
//! value per node of the `(d, lmax)` quadrature grid, in grid order. Relative
//! paths are resolved against the config's directory.
//!
//! Coefficient file: `{"d", "lmax", "coefficients": [{"index": [l, m_{d−2}, …, m_1], "A": [re, im], "B": [re, im]}]}`.
//!
//! Points file: `{"points": [{"cartesian": [x_1, …, x_d]}, {"ultraspherical": {"r", "theta": [θ_d, …, θ_3], "phi"}}]}`.
//!
//! Values file: `{"values": [[re, im], ...]}`, one per point, in input order.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Deserialize;

use crate::error::Error;
use crate::gegenbauer::{assoc, norm_factor, poly};
use crate::geometry::{to_ultraspherical, CartesianPoint, UltrasphericalPoint};
use crate::harmonics::{count, eval_harmonic, MultiIndex};
use crate::quadrature::sphere_grid;
use crate::solver::{eval_expansion, solve, BoundaryProblem, BoundarySamples, Domain, HarmonicExpansion, RadialCoeffs, SphereData};
use crate::verify::{self, VerifyConfig, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest dimension accepted by `solve`; grids grow like `(lmax+2)^{d−2}`.
pub const MAX_SOLVE_DIM: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "ultraspherical", version, about = "Ultraspherical polynomials, hyperspherical harmonics and Laplace boundary problems in d dimensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the identity suite and report one line per check.
    Verify(VerifyArgs),
    /// Print a table of polynomial values, associated functions, normalization factors or counts.
    Tabulate {
        #[command(subcommand)]
        table: Table,
    },
    /// Fit a Dirichlet problem and write its coefficient file.
    Solve(SolveArgs),
    /// Evaluate a coefficient file at the points of a points file.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Dimension or inclusive range, e.g. `4` or `3-8` (3 ≤ d ≤ 8).
    #[arg(long = "d", value_parser = parse_dim_range)]
    pub d: DimRange,
    /// Highest harmonic level (≤ 8).
    #[arg(long, default_value_t = 4)]
    pub lmax: usize,
    /// Tolerance for every check except the finite-difference harmonicity check (fixed at 1e-4).
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Write the full report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimRange {
    pub min: usize,
    pub max: usize,
}

fn parse_dim_range(s: &str) -> Result<DimRange, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{s}` is not a dimension or range like 3-8"));
    match s.split_once('-') {
        Some((a, b)) => Ok(DimRange { min: num(a)?, max: num(b)? }),
        None => {
            let d = num(s)?;
            Ok(DimRange { min: d, max: d })
        }
    }
}

/// Columns: `poly` → `l x P_{l,d}(x)`; `assoc` → `l m θ P^m_{l,d}(cos θ)`;
/// `norm` → `l n N^{(d)}_{ln}`; `count` → `l N_d(l)`.
#[derive(Debug, Subcommand)]
pub enum Table {
    /// P_{l,d}(x). Columns: l, x, value.
    Poly {
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        l: usize,
        /// One or more arguments, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        x: Vec<f64>,
    },
    /// P^m_{l,d}(cos θ). Columns: l, m, theta, value.
    Assoc {
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        theta: Vec<f64>,
    },
    /// Normalization factor N^{(d)}_{ln}; every n ≤ l when --n is absent. Columns: l, n, value.
    Norm {
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Number of harmonics per level. Columns: l, count.
    Count {
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        lmax: usize,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Problem config (JSON).
    pub config: PathBuf,
    /// Coefficient file to write; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Coefficient file written by `solve`.
    pub coefficients: PathBuf,
    /// Points file.
    pub points: PathBuf,
    /// Values file to write; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Failure carrying the exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Verify(a) => cmd_verify(a, out),
        Command::Tabulate { table } => {
            let text = cmd_tabulate(table)?;
            emit(out, None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Solve(a) => {
            let text = cmd_solve(&a.config)?;
            emit(out, a.output.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Eval(a) => {
            let text = cmd_eval(&a.coefficients, &a.points)?;
            emit(out, a.output.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| usage(format!("cannot write output: {e}"))),
    }
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = VerifyConfig::new(a.d.min, a.d.max, a.lmax, a.tol)?;
    let report = verify::run(&cfg)?;
    out.write_all(format_report(&report).as_bytes())
        .map_err(|e| usage(format!("cannot write output: {e}")))?;
    if let Some(path) = &a.report {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        fs::write(path, json + "\n").map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
}

pub fn format_report(report: &VerifyReport) -> String {
    let mut s = String::new();
    for c in &report.checks {
        let _ = writeln!(
            s,
            "{} {:<20} d={} lmax={:<2} residual={:.3e} tol={:.1e}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.d,
            c.lmax,
            c.max_residual,
            c.tolerance
        );
    }
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    let _ = writeln!(
        s,
        "{}: {} checks, {} failed",
        if report.pass { "PASS" } else { "FAIL" },
        report.checks.len(),
        failed
    );
    s
}

/// `{:.16e}`: 17 significant digits.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn need_dim(d: usize) -> Result<(), CliError> {
    if d < 3 {
        return Err(usage(format!("dimension d = {d} is unsupported; need d >= 3")));
    }
    Ok(())
}

pub fn cmd_tabulate(t: &Table) -> Result<String, CliError> {
    let mut s = String::new();
    match t {
        Table::Poly { d, l, x } => {
            need_dim(*d)?;
            s.push_str("# l x P_{l,d}(x)\n");
            for &x in x {
                if !(-1.0..=1.0).contains(&x) {
                    return Err(usage(format!("x = {x} must lie in [-1, 1]")));
                }
                let _ = writeln!(s, "{l} {} {}", num(x), num(poly(*l, *d, x)));
            }
        }
        Table::Assoc { d, l, m, theta } => {
            need_dim(*d)?;
            if m > l {
                return Err(usage(format!("order m = {m} exceeds degree l = {l}")));
            }
            s.push_str("# l m theta P^m_{l,d}(cos theta)\n");
            for &t in theta {
                if !(0.0..=std::f64::consts::PI).contains(&t) {
                    return Err(usage(format!("theta = {t} must lie in [0, pi]")));
                }
                let _ = writeln!(s, "{l} {m} {} {}", num(t), num(assoc(*l, *m, *d, t)));
            }
        }
        Table::Norm { d, l, n } => {
            need_dim(*d)?;
            let ns: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (0..=*l).collect(),
            };
            s.push_str("# l n N^{(d)}_{ln}\n");
            for n in ns {
                let _ = writeln!(s, "{l} {n} {}", num(norm_factor(*l, n, *d)?));
            }
        }
        Table::Count { d, lmax } => {
            need_dim(*d)?;
            s.push_str("# l N_d(l)\n");
            for l in 0..=*lmax {
                let _ = writeln!(s, "{l} {}", count(*d, l));
            }
        }
    }
    Ok(s)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolveConfig {
    d: usize,
    kind: String,
    radii: Vec<f64>,
    lmax: usize,
    boundary: Vec<BoundaryEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundaryEntry {
    radius: f64,
    data: Option<String>,
    #[serde(rename = "samples-file")]
    samples_file: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SamplesFile {
    d: usize,
    lmax: usize,
    values: Vec<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientFile {
    d: usize,
    lmax: usize,
    coefficients: Vec<CoefficientRecord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientRecord {
    index: Vec<i64>,
    #[serde(rename = "A")]
    a: [f64; 2],
    #[serde(rename = "B")]
    b: [f64; 2],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsFile {
    points: Vec<PointSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum PointSpec {
    Cartesian(Vec<f64>),
    Ultraspherical { r: f64, theta: Vec<f64>, phi: f64 },
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path, what: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {what} {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{what} {} does not match the schema: {e}", path.display())))
}

fn sphere_data(cfg: &SolveConfig, entry: &BoundaryEntry, base: &Path) -> Result<SphereData, CliError> {
    let grid = sphere_grid(cfg.d, cfg.lmax)?;
    let samples = match (&entry.data, &entry.samples_file) {
        (Some(spec), None) => {
            let text = spec
                .strip_prefix("harmonic:")
                .ok_or_else(|| usage(format!("boundary data `{spec}` must have the form harmonic:(l,...;m1)")))?;
            let idx = MultiIndex::from_str(text)?;
            if idx.dim() != cfg.d {
                return Err(usage(format!(
                    "boundary harmonic {idx} belongs to dimension {}, config has d = {}",
                    idx.dim(),
                    cfg.d
                )));
            }
            if idx.l() > cfg.lmax {
                return Err(usage(format!("boundary harmonic {idx} has degree above lmax = {}", cfg.lmax)));
            }
            BoundarySamples::from_fn(grid, |a| eval_harmonic(&idx, a).expect("grid angles match the index"))
        }
        (None, Some(file)) => {
            let path = base.join(file);
            let sf: SamplesFile = read_json(&path, "samples file")?;
            if sf.d != cfg.d {
                return Err(usage(format!(
                    "samples file {} has d = {}, config has d = {}",
                    path.display(),
                    sf.d,
                    cfg.d
                )));
            }
            let source = sphere_grid(sf.d, sf.lmax)?;
            let values: Vec<Complex64> = sf.values.iter().map(|v| Complex64::new(v[0], v[1])).collect();
            let samples = BoundarySamples::new(source, values)?;
            if sf.lmax < cfg.lmax {
                return Err(usage(format!(
                    "samples file {} resolves lmax = {}, config asks for {}",
                    path.display(),
                    sf.lmax,
                    cfg.lmax
                )));
            }
            samples
        }
        _ => {
            return Err(usage(format!(
                "boundary entry at radius {} needs exactly one of `data` and `samples-file`",
                entry.radius
            )))
        }
    };
    Ok(SphereData {
        radius: entry.radius,
        samples,
    })
}

fn build_problem(cfg: &SolveConfig, base: &Path) -> Result<BoundaryProblem, CliError> {
    if cfg.d < 3 || cfg.d > MAX_SOLVE_DIM {
        return Err(usage(format!("dimension d = {} is out of range 3..={MAX_SOLVE_DIM}", cfg.d)));
    }
    let expected = match cfg.kind.as_str() {
        "interior" | "exterior" => 1,
        "annulus" => 2,
        other => return Err(usage(format!("unknown kind `{other}`; expected interior, exterior or annulus"))),
    };
    if cfg.radii.len() != expected {
        return Err(usage(format!("{} problem needs {expected} radii, got {}", cfg.kind, cfg.radii.len())));
    }
    if let Some(r) = cfg.radii.iter().find(|r| !(**r > 0.0 && r.is_finite())) {
        return Err(usage(format!("radius {r} must be positive and finite")));
    }
    if expected == 2 && cfg.radii[0] >= cfg.radii[1] {
        return Err(usage(format!(
            "annulus requires R_inner < R_outer, got radii [{}, {}]",
            cfg.radii[0], cfg.radii[1]
        )));
    }
    let mut spheres = Vec::with_capacity(expected);
    for &r in &cfg.radii {
        let mut matching = cfg.boundary.iter().filter(|b| b.radius == r);
        let entry = matching
            .next()
            .ok_or_else(|| usage(format!("no boundary entry for radius {r}")))?;
        if matching.next().is_some() {
            return Err(usage(format!("more than one boundary entry for radius {r}")));
        }
        spheres.push(sphere_data(cfg, entry, base)?);
    }
    if let Some(extra) = cfg.boundary.iter().find(|b| !cfg.radii.contains(&b.radius)) {
        return Err(usage(format!("boundary entry at radius {} matches none of the radii", extra.radius)));
    }
    let domain = match cfg.kind.as_str() {
        "interior" => Domain::Interior(spheres.remove(0)),
        "exterior" => Domain::Exterior(spheres.remove(0)),
        _ => {
            let outer = spheres.pop().expect("two spheres");
            let inner = spheres.pop().expect("two spheres");
            Domain::Annulus { inner, outer }
        }
    };
    Ok(BoundaryProblem::new(cfg.d, cfg.lmax, domain)?)
}

pub fn cmd_solve(config: &Path) -> Result<String, CliError> {
    let cfg: SolveConfig = read_json(config, "config")?;
    let base = config.parent().unwrap_or(Path::new("."));
    let problem = build_problem(&cfg, base)?;
    Ok(format_coefficients(&solve(&problem)?))
}

fn pair(z: Complex64) -> String {
    format!("[{}, {}]", num(z.re), num(z.im))
}

/// Coefficient file text, records in ascending index order.
pub fn format_coefficients(exp: &HarmonicExpansion) -> String {
    let mut s = format!("{{\n  \"d\": {},\n  \"lmax\": {},\n  \"coefficients\": [", exp.dim(), exp.lmax());
    for (i, (idx, c)) in exp.iter().enumerate() {
        let index: Vec<String> = idx.to_vec().iter().map(i64::to_string).collect();
        let _ = write!(
            s,
            "{}\n    {{\"index\": [{}], \"A\": {}, \"B\": {}}}",
            if i == 0 { "" } else { "," },
            index.join(", "),
            pair(c.a),
            pair(c.b)
        );
    }
    s.push_str(if exp.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    s
}

pub fn read_coefficients(path: &Path) -> Result<HarmonicExpansion, CliError> {
    let file: CoefficientFile = read_json(path, "coefficient file")?;
    let mut exp = HarmonicExpansion::new(file.d, file.lmax)?;
    for rec in file.coefficients {
        let idx = MultiIndex::from_slice(file.d, &rec.index)?;
        exp.insert(
            idx,
            RadialCoeffs::new(Complex64::new(rec.a[0], rec.a[1]), Complex64::new(rec.b[0], rec.b[1])),
        )?;
    }
    Ok(exp)
}

pub fn cmd_eval(coefficients: &Path, points: &Path) -> Result<String, CliError> {
    let exp = read_coefficients(coefficients)?;
    let pts: PointsFile = read_json(points, "points file")?;
    let mut s = String::from("{\n  \"values\": [");
    for (i, p) in pts.points.iter().enumerate() {
        let mismatch = |found: usize| {
            usage(format!(
                "point {i} has dimension {found}, coefficient file has d = {}",
                exp.dim()
            ))
        };
        let v = match p {
            PointSpec::Cartesian(x) => {
                if x.len() != exp.dim() {
                    return Err(mismatch(x.len()));
                }
                let q = to_ultraspherical(&CartesianPoint::new(x.clone()))?;
                eval_expansion(&exp, q.r, &q.angles)
            }
            PointSpec::Ultraspherical { r, theta, phi } => {
                if theta.len() + 2 != exp.dim() {
                    return Err(mismatch(theta.len() + 2));
                }
                let q = UltrasphericalPoint::new(*r, theta.clone(), *phi)?;
                eval_expansion(&exp, q.r, &q.angles)
            }
        }
        .map_err(|e| usage(format!("point {i}: {e}")))?;
        let _ = write!(s, "{}\n    {}", if i == 0 { "" } else { "," }, pair(v));
    }
    s.push_str(if pts.points.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    Ok(s)
}

/// Samples-file text for values on the `(d, lmax)` grid.
pub fn format_samples(d: usize, lmax: usize, values: &[Complex64]) -> String {
    let mut s = format!("{{\n  \"d\": {d},\n  \"lmax\": {lmax},\n  \"values\": [");
    for (i, v) in values.iter().enumerate() {
        let _ = write!(s, "{}\n    {}", if i == 0 { "" } else { "," }, pair(*v));
    }
    s.push_str(if values.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("ultraspherical").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dim_ranges() {
        assert_eq!(parse_dim_range("4"), Ok(DimRange { min: 4, max: 4 }));
        assert_eq!(parse_dim_range("3-8"), Ok(DimRange { min: 3, max: 8 }));
        assert!(parse_dim_range("x").is_err());
    }

    #[test]
    fn tabulate_examples() {
        let (code, out, _) = run_str(&["tabulate", "count", "--d", "4", "--lmax", "3"]);
        assert_eq!(code, 0);
        let counts: Vec<&str> = out.lines().skip(1).map(|l| l.split(' ').nth(1).unwrap()).collect();
        assert_eq!(counts, ["1", "4", "9", "16"]);

        let (code, out, _) = run_str(&["tabulate", "poly", "--d", "3", "--l", "2", "--x", "0"]);
        assert_eq!(code, 0);
        let v: f64 = out.lines().nth(1).unwrap().split(' ').nth(2).unwrap().parse().unwrap();
        assert_eq!(v, -0.5);

        let (_, out, _) = run_str(&["tabulate", "norm", "--d", "3", "--l", "1", "--n", "0"]);
        let v: f64 = out.lines().nth(1).unwrap().split(' ').nth(2).unwrap().parse().unwrap();
        assert!((v - 1.5f64.sqrt()).abs() < 1e-15);

        let (code, out, _) = run_str(&["tabulate", "poly", "--d", "4", "--l", "3", "--x", "-0.5,0.25"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(num(0.1), "1.0000000000000001e-1");
        assert_eq!(num(-0.5), "-5.0000000000000000e-1");
        let v = 1.0 / 3.0;
        assert_eq!(num(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["tabulate", "poly", "--d", "2", "--l", "1", "--x", "0"]).0, 2);
        assert_eq!(run_str(&["tabulate", "assoc", "--d", "3", "--l", "1", "--m", "2", "--theta", "1"]).0, 2);
        assert_eq!(run_str(&["verify", "--d", "2", "--lmax", "2"]).0, 2);
        assert_eq!(run_str(&["verify", "--d", "4", "--lmax", "9"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["tabulate", "--help"]).0, 0);
    }

    #[test]
    fn coefficient_text_roundtrips() {
        let mut exp = HarmonicExpansion::new(4, 2).unwrap();
        let idx = MultiIndex::new(4, 2, vec![1, -1]).unwrap();
        exp.insert(idx.clone(), RadialCoeffs::new(Complex64::new(0.1, -1.0 / 3.0), Complex64::new(2.5e-300, 0.0)))
            .unwrap();
        exp.insert(MultiIndex::zero(4), RadialCoeffs::new(Complex64::new(1.0, 0.0), Complex64::default()))
            .unwrap();
        let text = format_coefficients(&exp);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        fs::write(&path, &text).unwrap();
        let back = read_coefficients(&path).unwrap();
        assert_eq!(back, exp);
        assert_eq!(format_coefficients(&back), text);
    }
}
