//! Command-line front end. JSON on stdout, SVG to `--output`.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

pub mod svg;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::cubic::{classify_cubic, normalize_quadrilateral, ArrangementA};
use crate::error::Error;
use crate::exactcore::serial::parse_rational;
use crate::exactcore::{BivarPoly, FieldElem, Point, QMatrix, Rational};
use crate::interpcurve::{curve_divisibility_report, interpolation_curve};
use crate::linsys::{
    ambient_dimension, delta, dichotomy_experiment, solve_linear_system, PointConfig,
};
use crate::multiplicity::{intersection_multiplicity, milnor_number};
use crate::pencil::{
    hamiltonian_slice, linearization_spectrum, pencil_vector_field, GridConfig, PencilSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Delta,
    Solve,
    Classify3,
    Orbit,
    InterpCurve,
    Pencil,
    Multiplicity,
    Sample,
    Plot,
}

/// A validated command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub degree: Option<i64>,
    pub input_path: Option<PathBuf>,
    pub output_path: Option<PathBuf>,
    pub seed: u64,
    pub trials: usize,
    /// `(xmin, xmax, ymin, ymax)`.
    pub plot_window: [Rational; 4],
    pub resolution: usize,
    pub level: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "critpoint",
    version,
    about = "Plane polynomials with prescribed critical points"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Number of points needed in degree d and the ambient dimension.
    Delta(Flags),
    /// Basis and projective dimension of the linear system.
    Solve(Flags),
    /// Classify a 4-point configuration for cubics.
    Classify3(Flags),
    /// The 24 normalized fourth points of a quadrilateral.
    Orbit(Flags),
    /// Interpolation curve of a configuration with one point missing.
    InterpCurve(Flags),
    /// Hamiltonian slice and spectra of a pencil of vector fields.
    Pencil(Flags),
    /// Intersection multiplicity at a point.
    Multiplicity(Flags),
    /// Classify random configurations.
    Sample(Flags),
    /// Render the arrangement, points and level curves to SVG.
    Plot(Flags),
}

#[derive(Args, Debug)]
struct Flags {
    #[arg(long)]
    degree: Option<i64>,
    /// Input JSON file, written `@path`.
    #[arg(long)]
    points: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// `xmin,xmax,ymin,ymax`.
    #[arg(long, default_value = "-2,3,-2,3", allow_hyphen_values = true)]
    window: String,
    #[arg(long, default_value_t = 512)]
    resolution: usize,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    level: String,
}

pub fn parse_job<I, T>(args: I) -> std::result::Result<JobSpec, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("critpoint"))
        .chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError(e.render().to_string()))?;
    let (command, flags) = match cli.command {
        Sub::Delta(f) => (Command::Delta, f),
        Sub::Solve(f) => (Command::Solve, f),
        Sub::Classify3(f) => (Command::Classify3, f),
        Sub::Orbit(f) => (Command::Orbit, f),
        Sub::InterpCurve(f) => (Command::InterpCurve, f),
        Sub::Pencil(f) => (Command::Pencil, f),
        Sub::Multiplicity(f) => (Command::Multiplicity, f),
        Sub::Sample(f) => (Command::Sample, f),
        Sub::Plot(f) => (Command::Plot, f),
    };
    let usage = |m: &str| Err(UsageError(format!("error: {m}")));
    if let Some(d) = flags.degree {
        if d < 3 {
            return usage(&format!("--degree must be at least 3, got {d}"));
        }
    }
    let input_path = flags
        .points
        .as_deref()
        .map(|s| PathBuf::from(s.strip_prefix('@').unwrap_or(s)));
    let needs_degree = matches!(command, Command::Delta | Command::Sample);
    if needs_degree && flags.degree.is_none() {
        return usage("--degree is required");
    }
    let needs_input = matches!(
        command,
        Command::Classify3
            | Command::Orbit
            | Command::InterpCurve
            | Command::Pencil
            | Command::Multiplicity
    );
    if needs_input && input_path.is_none() {
        return usage("--points is required");
    }
    if command == Command::Solve && input_path.is_none() {
        return usage("--points is required");
    }
    if command == Command::Plot && flags.output.is_none() {
        return usage("--output is required");
    }
    if command == Command::Sample && flags.trials == 0 {
        return usage("--trials must be at least 1");
    }
    if flags.resolution < 2 {
        return usage("--resolution must be at least 2");
    }
    let parts: Vec<&str> = flags.window.split(',').collect();
    let window: Vec<Rational> = parts
        .iter()
        .map(|s| parse_rational(s))
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| UsageError(format!("error: --window: {e}")))?;
    let plot_window: [Rational; 4] = window
        .try_into()
        .map_err(|_| UsageError("error: --window needs four values xmin,xmax,ymin,ymax".into()))?;
    if plot_window[0] >= plot_window[1] || plot_window[2] >= plot_window[3] {
        return usage("--window must have xmin < xmax and ymin < ymax");
    }
    let level =
        parse_rational(&flags.level).map_err(|e| UsageError(format!("error: --level: {e}")))?;
    Ok(JobSpec {
        command,
        degree: flags.degree,
        input_path,
        output_path: flags.output,
        seed: flags.seed,
        trials: flags.trials,
        plot_window,
        resolution: flags.resolution,
        level,
    })
}

/// Result of running a job: exit code and the text for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Input document. Which fields are used depends on the command.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct InputDoc {
    degree: Option<i64>,
    points: Option<Vec<(FieldElem, FieldElem)>>,
    f: Option<BivarPoly>,
    g: Option<BivarPoly>,
    m: Option<[[FieldElem; 2]; 2]>,
    grid: Option<GridDoc>,
    point: Option<(FieldElem, FieldElem)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GridDoc {
    x: Vec<FieldElem>,
    y: Vec<FieldElem>,
}

fn read_input(path: &Path) -> std::result::Result<InputDoc, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Failure::Usage(format!(
            "error: --points: cannot read {}: {e}",
            path.display()
        ))
    })?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Usage(format!(
            "error: --points: malformed input {}: {e}",
            path.display()
        ))
    })
}

/// Runs a parsed job. Never panics on bad input; never touches stdout itself.
pub fn run_job(j: &JobSpec) -> Outcome {
    match dispatch(j) {
        Ok(v) => Outcome {
            code: 0,
            stdout: pretty(&v),
            stderr: String::new(),
        },
        Err(Failure::Usage(m)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("{m}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: pretty(&json!({"error": e.code(), "detail": e.to_string()})),
            stderr: String::new(),
        },
    }
}

/// Parse and run.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_job(args) {
        Ok(j) => run_job(&j),
        Err(UsageError(m)) => {
            let m = if m.ends_with('\n') {
                m
            } else {
                format!("{m}\n")
            };
            // clap routes --help and --version through the error path
            let is_help =
                m.starts_with("Usage") || m.starts_with("critpoint ") || m.contains("\nCommands:");
            if is_help {
                Outcome {
                    code: 0,
                    stdout: m,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: m,
                }
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn resolve_degree(j: &JobSpec, doc: &InputDoc) -> std::result::Result<i64, Failure> {
    match j.degree.or(doc.degree) {
        Some(d) if d >= 3 => Ok(d),
        Some(d) => Err(Failure::Usage(format!(
            "error: degree must be at least 3, got {d}"
        ))),
        None => Err(Failure::Usage(
            "error: --degree is required (flag or input field)".into(),
        )),
    }
}

fn config_of(doc: &InputDoc) -> std::result::Result<PointConfig, Failure> {
    let pts = doc
        .points
        .clone()
        .ok_or_else(|| Failure::Usage("error: --points: input has no \"points\" field".into()))?;
    Ok(PointConfig::new(pts)?)
}

fn dispatch(j: &JobSpec) -> std::result::Result<Value, Failure> {
    let doc = match &j.input_path {
        Some(p) => read_input(p)?,
        None => InputDoc::default(),
    };
    match j.command {
        Command::Delta => {
            let d = resolve_degree(j, &doc)?;
            let amb = ambient_dimension(d)?;
            Ok(json!({
                "delta": delta(d)?,
                "ambient_dim": amb,
                "parity": if amb % 2 == 0 { "even" } else { "odd" },
            }))
        }
        Command::Solve => {
            let d = resolve_degree(j, &doc)?;
            let cfg = config_of(&doc)?;
            Ok(to_value(&solve_linear_system(d, &cfg)?))
        }
        Command::Classify3 => {
            let cfg = config_of(&doc)?;
            Ok(to_value(&classify_cubic(&cfg)?))
        }
        Command::Orbit => {
            let cfg = config_of(&doc)?;
            let n = normalize_quadrilateral(&cfg)?;
            let images: Vec<Point> = n.images.iter().map(|(_, q)| q.clone()).collect();
            let distinct: Vec<Point> = n.distinct_images().into_iter().collect();
            Ok(json!({
                "images": to_value(&images),
                "distinct": to_value(&distinct),
                "canonical": to_value(&n.canonical),
                "isotropy": 24 / distinct.len(),
            }))
        }
        Command::InterpCurve => {
            let d = resolve_degree(j, &doc)?;
            let cfg = config_of(&doc)?;
            let curve = interpolation_curve(d, &cfg)?;
            let candidates = structural_candidates(&cfg);
            let report = curve_divisibility_report(&curve, &candidates)?;
            let factors: Vec<Value> = report
                .iter()
                .map(|r| json!({"candidate": to_value(&r.candidate), "divides": r.divides}))
                .collect();
            if let Some(out) = &j.output_path {
                let doc = svg::render_svg(
                    j,
                    &svg::PlotPayload {
                        level_curves: vec![(curve.poly.clone(), Rational::default())],
                        points: cfg.points().to_vec(),
                        arrangement: false,
                        convexity: false,
                    },
                )?;
                write_output(out, &doc)?;
            }
            Ok(json!({
                "curve": to_value(&curve.poly),
                "total_degree": curve.degree(),
                "degree_bound": curve.degree_bound,
                "factors": factors,
            }))
        }
        Command::Pencil => pencil_job(&doc),
        Command::Multiplicity => {
            let f = doc.f.as_ref().ok_or_else(|| {
                Failure::Usage("error: --points: input has no \"f\" field".into())
            })?;
            let p = doc.point.clone().ok_or_else(|| {
                Failure::Usage("error: --points: input has no \"point\" field".into())
            })?;
            let m = match &doc.g {
                Some(g) => intersection_multiplicity(f, g, &p),
                None => milnor_number(f, &p),
            };
            Ok(json!({"point": to_value(&p), "multiplicity": to_value(&m)}))
        }
        Command::Sample => {
            let d = resolve_degree(j, &doc)?;
            Ok(to_value(&dichotomy_experiment(d, j.trials, j.seed)?))
        }
        Command::Plot => {
            let points = match &doc.points {
                Some(p) => PointConfig::new(p.clone())?.points().to_vec(),
                None => Vec::new(),
            };
            let level_curves = doc.f.iter().map(|f| (f.clone(), j.level.clone())).collect();
            let payload = svg::PlotPayload {
                level_curves,
                points,
                arrangement: true,
                convexity: true,
            };
            let text = svg::render_svg(j, &payload)?;
            let out = j.output_path.as_ref().expect("validated by parse_job");
            write_output(out, &text)?;
            Ok(json!({
                "output": out.display().to_string(),
                "bytes": text.len(),
                "level_segments": payload
                    .level_curves
                    .iter()
                    .map(|(f, l)| svg::level_segments(f, l, &j.plot_window, j.resolution).len())
                    .collect::<Vec<_>>(),
            }))
        }
    }
}

fn write_output(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| {
        Failure::Usage(format!(
            "error: --output: cannot write {}: {e}",
            path.display()
        ))
    })
}

fn pencil_job(doc: &InputDoc) -> std::result::Result<Value, Failure> {
    let (f, g, mut points) = match (&doc.grid, &doc.f, &doc.g) {
        (Some(grid), _, _) => {
            let grid = GridConfig::new(grid.x.clone(), grid.y.clone())?;
            (grid.f_curve(), grid.g_curve(), grid.points())
        }
        (None, Some(f), Some(g)) => (f.clone(), g.clone(), Vec::new()),
        _ => {
            return Err(Failure::Usage(
                "error: --points: pencil input needs \"grid\" or both \"f\" and \"g\"".into(),
            ))
        }
    };
    if let Some(p) = &doc.points {
        points = PointConfig::new(p.clone())?.points().to_vec();
    }
    let m = doc.m.clone().unwrap_or_else(|| {
        [
            [FieldElem::one(), FieldElem::zero()],
            [FieldElem::zero(), FieldElem::one()],
        ]
    });
    let spec = PencilSpec::new(f.clone(), g.clone(), m);
    let x = pencil_vector_field(&spec);
    let slice = hamiltonian_slice(&f, &g);
    let spectra = points
        .iter()
        .map(|p| linearization_spectrum(&x, p))
        .collect::<crate::error::Result<Vec<_>>>()?;
    let basis: Vec<Value> = slice.basis.iter().map(to_value).collect();
    Ok(json!({
        "slice_dim": slice.dim,
        "slice_basis": basis,
        "zeros_checked": spectra.len(),
        "spectra": to_value(&spectra),
    }))
}

/// Lines through at least three base points, and the conic through all of
/// them when one exists.
pub fn structural_candidates(cfg: &PointConfig) -> Vec<BivarPoly> {
    let pts = cfg.points();
    let mut out: Vec<BivarPoly> = Vec::new();
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            let line = line_through(&pts[a], &pts[b]);
            let on = pts.iter().filter(|p| line.evaluate(p).is_zero()).count();
            if on >= 3 && !out.contains(&line) {
                out.push(line);
            }
        }
    }
    if n >= 5 {
        let monos = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)];
        let rows = pts
            .iter()
            .map(|p| {
                monos
                    .iter()
                    .map(|&(i, j)| &p.0.pow(i) * &p.1.pow(j))
                    .collect()
            })
            .collect();
        let rn = QMatrix::from_rows_with_cols(rows, Some(6)).rank_and_nullspace();
        if rn.basis.len() == 1 {
            let conic = BivarPoly::from_coefficient_vector(&monos, &rn.basis[0]).monic();
            if conic.degree().finite() == Some(2)
                && !out
                    .iter()
                    .any(|l| conic.exact_divide(l).ok().flatten().is_some())
            {
                out.push(conic);
            }
        }
    }
    out
}

fn line_through(p: &Point, q: &Point) -> BivarPoly {
    // (y_q − y_p)(x − x_p) − (x_q − x_p)(y − y_p)
    let a = &q.1 - &p.1;
    let b = &p.0 - &q.0;
    let c = -&(&(&a * &p.0) + &(&b * &p.1));
    BivarPoly::linear(a, b, c).monic()
}

/// Line factors of the six-line arrangement, exposed for plotting.
pub fn arrangement_lines() -> [BivarPoly; 6] {
    ArrangementA::new().factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let j = parse_job(["classify3", "--points", "@cfg.json"]).unwrap();
        assert_eq!(j.command, Command::Classify3);
        assert_eq!(j.input_path, Some(PathBuf::from("cfg.json")));
        assert_eq!((j.seed, j.trials, j.resolution), (0, 100, 512));
        let j = parse_job(["delta", "--degree", "6"]).unwrap();
        assert_eq!((j.command, j.degree), (Command::Delta, Some(6)));
        let e = parse_job(["solve", "--degree", "0"]).unwrap_err();
        assert!(e.0.contains("--degree"));
        let e = parse_job(["delta", "--degree", "4", "--bogus"]).unwrap_err();
        assert!(e.0.contains("--bogus"));
        let e = parse_job(["plot", "--window", "1,0,0,1", "--output", "a.svg"]).unwrap_err();
        assert!(e.0.contains("--window"));
    }

    #[test]
    fn delta_json() {
        let out = run(["delta", "--degree", "4"]);
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v, json!({"delta": 7, "ambient_dim": 14, "parity": "even"}));
        assert_eq!(run(["solve", "--degree", "0"]).code, 2);
    }

    #[test]
    fn candidates_find_lines_and_conics() {
        let cfg =
            PointConfig::from_ints(&[(0, 0), (0, 1), (0, 2), (1, 0), (1, 3), (2, 7)]).unwrap();
        let c = structural_candidates(&cfg);
        assert!(c.contains(&BivarPoly::x()));
        let circle =
            PointConfig::from_ints(&[(3, 4), (4, 3), (-3, 4), (4, -3), (0, 5), (5, 0)]).unwrap();
        let c = structural_candidates(&circle);
        assert_eq!(
            c,
            vec![BivarPoly::from_int_terms(&[
                (2, 0, 1),
                (0, 2, 1),
                (0, 0, -25)
            ])]
        );
    }
}
