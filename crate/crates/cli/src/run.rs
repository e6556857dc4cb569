//! Dispatch of analysis requests to the library.

use monocone::classify::{
    classify_hfm, classify_ohfm, classify_primary, classify_ufm, face_submonoids, face_ufm_map, finitary_certificate,
    mu, verify_finitary_certificate,
};
use monocone::cone::{cone_from_generators, realize};
use monocone::exactarith::linalg::QVector;
use monocone::factorization::{factorizations, lengths};
use monocone::monoid::{atoms, generated_atoms, rank, MonoidSpec, Window};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{run_error, CliError, CliResult, ErrorCode};
use crate::plot::plot_points;
use crate::request::{build_window, AnalysisRequest, Command};

pub const TOOL: &str = "monocone";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const FINITARY_TRIALS: usize = 1000;
pub const MU_BOUND: u64 = 64;

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub command: Command,
    pub result: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub request: AnalysisRequest,
    pub results: Vec<CommandResult>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("results serialize")
}

fn check_point(m: &MonoidSpec, x: &[i64], cmd: &Command) -> CliResult<()> {
    if x.len() != m.dim() || x.iter().any(|&v| v < 0) {
        return Err(CliError::new(
            ErrorCode::BadArgument,
            format!("{}: {x:?} is not a point of N^{}", cmd.name(), m.dim()),
        ));
    }
    Ok(())
}

fn generated_only(m: &MonoidSpec, cmd: &Command) -> CliResult<()> {
    if m.as_generated().is_none() {
        return Err(CliError::new(
            ErrorCode::UnsupportedForKind,
            format!("{} needs a finitely generated monoid", cmd.name()),
        ));
    }
    Ok(())
}

fn run_command(m: &MonoidSpec, w: &Window, cmd: &Command) -> CliResult<Value> {
    match cmd {
        Command::Atoms => {
            let r = atoms(m, w);
            Ok(json!({ "atoms": r.atoms, "complete": r.complete, "window": w, "rank": rank(m, w) }))
        }
        Command::Factor(x) => {
            check_point(m, x, cmd)?;
            let zs = factorizations(m, x).map_err(run_error)?;
            Ok(json!({ "x": x, "count": zs.len(), "factorizations": zs }))
        }
        Command::Lengths(x) => {
            check_point(m, x, cmd)?;
            Ok(json!({ "x": x, "lengths": lengths(m, x).map_err(run_error)? }))
        }
        Command::Faces => {
            generated_only(m, cmd)?;
            let data = face_submonoids(m).map_err(run_error)?;
            let map = face_ufm_map(m).map_err(run_error)?;
            let faces: Vec<Value> = data
                .submonoids
                .iter()
                .zip(&data.lattice.faces)
                .map(|(s, f)| {
                    json!({
                        "index": s.face,
                        "dim": s.dim,
                        "rays": f.ray_indices,
                        "normal": f.supporting_normal,
                        "generators": s.generators,
                        "atoms": s.atoms,
                        "ufm": map.ufm[s.face],
                    })
                })
                .collect();
            Ok(json!({
                "rays": data.cone.extreme_rays(),
                "facets": data.cone.facets(),
                "faces": faces,
                "covers": data.lattice.covers,
                "non_ufm": map.non_ufm,
                "non_ufm_interval": map.interval,
            }))
        }
        Command::Classify => Ok(json!({
            "ufm": classify_ufm(m, w),
            "hfm": classify_hfm(m, w),
            "ohfm": classify_ohfm(m, w),
            "primary": classify_primary(m, w),
        })),
        Command::CertifyFinitary => {
            generated_only(m, cmd)?;
            let cert = finitary_certificate(m).map_err(run_error)?;
            let check = verify_finitary_certificate(m, &cert, w, FINITARY_TRIALS, 0).map_err(run_error)?;
            Ok(json!({ "certificate": cert, "verification": check }))
        }
        Command::Mu(x) => {
            check_point(m, x, cmd)?;
            Ok(value(&mu(m, x, MU_BOUND, w).map_err(run_error)?))
        }
        Command::Realize => {
            generated_only(m, cmd)?;
            let gens: Vec<QVector> = generated_atoms(m).unwrap().iter().map(|a| QVector::from_ints(a)).collect();
            let cone = cone_from_generators(&gens).map_err(run_error)?;
            let points = realize(&cone, &w.bounds).map_err(run_error)?;
            let again = cone_from_generators(&points.iter().map(|p| QVector::from_ints(p)).collect::<Vec<_>>())
                .map_err(run_error)?;
            Ok(json!({
                "rays": cone.extreme_rays(),
                "facets": cone.facets(),
                "points": points.len(),
                "regenerates": again == cone,
            }))
        }
        Command::Plot => {
            let pts = plot_points(m, w)?;
            let rows: Vec<[i64; 3]> = pts.iter().map(|&(x, y, a)| [x, y, i64::from(a)]).collect();
            Ok(json!({ "columns": ["x", "y", "atom_flag"], "rows": rows }))
        }
    }
}

/// Runs every command of the request; the window flag, when given, overrides
/// the request's window.
pub fn run(mut request: AnalysisRequest, window: Option<Vec<i64>>) -> CliResult<Report> {
    if window.is_some() {
        request.window = window;
    }
    let m = request.monoid.build()?;
    let bounds = request.window.clone().ok_or_else(|| CliError::new(ErrorCode::SchemaViolation, "no window given"))?;
    let w = build_window(&bounds, m.dim())?;
    let results = request
        .commands
        .iter()
        .map(|c| Ok(CommandResult { command: c.clone(), result: run_command(&m, &w, c)? }))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Report { tool: TOOL, version: VERSION, request, results })
}

/// True when a JSON value contains a binary float anywhere.
pub fn contains_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(contains_float),
        Value::Object(o) => o.values().any(contains_float),
        _ => false,
    }
}
