//! JSON requests: monoid specs, windows and commands.

use monocone::exactarith::linalg::QVector;
use monocone::exactarith::parse_quad;
use monocone::exactarith::rational::parse_rational;
use monocone::monoid::{band, leamer, ConeWindowMonoid, MonoidSpec, Region, Window};
use serde::{Deserialize, Serialize};

use crate::error::{spec_error, CliError, CliResult, ErrorCode};

pub const SPEC_KINDS: [&str; 5] = ["generated", "cone-window", "leamer", "band", "builtin"];

/// An integer or a rational written as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn to_rational(&self) -> CliResult<monocone::exactarith::Rational> {
        match self {
            Number::Int(v) => Ok(monocone::exactarith::Rational::from_integer((*v).into())),
            Number::Text(s) => parse_rational(s).map_err(|e| CliError::new(ErrorCode::SchemaViolation, e.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MonoidJson {
    Generated {
        dim: usize,
        generators: Vec<Vec<i64>>,
    },
    ConeWindow {
        dim: usize,
        normals: Vec<Vec<Number>>,
        #[serde(default)]
        strict: Vec<bool>,
        #[serde(default)]
        special_points: Vec<Vec<i64>>,
        #[serde(default)]
        exclusions: Vec<Vec<i64>>,
    },
    Leamer {
        gamma: Vec<i64>,
        step: i64,
    },
    /// Bounds such as `"sqrt2"`, `"sqrt(3)"` or `"1/2 + sqrt(5)"`.
    Band {
        alpha: String,
        beta: String,
    },
    Builtin {
        tag: String,
    },
}

impl MonoidJson {
    pub fn build(&self) -> CliResult<MonoidSpec> {
        match self {
            MonoidJson::Generated { dim, generators } => {
                if *dim == 0 {
                    return Err(CliError::new(ErrorCode::SchemaViolation, "dim must be positive"));
                }
                MonoidSpec::generated(*dim, generators.clone()).map_err(spec_error)
            }
            MonoidJson::ConeWindow { dim, normals, strict, special_points, exclusions } => {
                let normals = normals
                    .iter()
                    .map(|n| n.iter().map(Number::to_rational).collect::<CliResult<Vec<_>>>().map(QVector::new))
                    .collect::<CliResult<Vec<_>>>()?;
                let strict = if strict.is_empty() { vec![false; normals.len()] } else { strict.clone() };
                let region = Region::Facets { normals, strict };
                ConeWindowMonoid::new(*dim, region, special_points.clone(), exclusions.clone())
                    .map(MonoidSpec::ConeWindow)
                    .map_err(spec_error)
            }
            MonoidJson::Leamer { gamma, step } => leamer(gamma, *step).map(MonoidSpec::Leamer).map_err(spec_error),
            MonoidJson::Band { alpha, beta } => {
                let a = parse_quad(alpha).map_err(spec_error)?;
                let b = parse_quad(beta).map_err(spec_error)?;
                band(a, b).map(MonoidSpec::ConeWindow).map_err(spec_error)
            }
            MonoidJson::Builtin { tag } => MonoidSpec::builtin(tag).map_err(spec_error),
        }
    }

    pub fn is_generated(&self) -> bool {
        matches!(self, MonoidJson::Generated { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Command {
    Atoms,
    Factor(Vec<i64>),
    Lengths(Vec<i64>),
    Faces,
    Classify,
    CertifyFinitary,
    Mu(Vec<i64>),
    Realize,
    Plot,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Atoms => "atoms",
            Command::Factor(_) => "factor",
            Command::Lengths(_) => "lengths",
            Command::Faces => "faces",
            Command::Classify => "classify",
            Command::CertifyFinitary => "certify-finitary",
            Command::Mu(_) => "mu",
            Command::Realize => "realize",
            Command::Plot => "plot",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisRequest {
    pub monoid: MonoidJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<Vec<i64>>,
    #[serde(default)]
    pub commands: Vec<Command>,
}

fn schema(e: serde_json::Error) -> CliError {
    CliError::new(ErrorCode::SchemaViolation, e.to_string())
}

fn check_kind(v: &serde_json::Value) -> CliResult<()> {
    match v.get("kind") {
        None => Err(CliError::new(ErrorCode::SchemaViolation, "monoid spec has no \"kind\"")),
        Some(serde_json::Value::String(k)) if SPEC_KINDS.contains(&k.as_str()) => Ok(()),
        Some(k) => Err(CliError::new(ErrorCode::UnknownSpecKind, format!("unknown spec kind {k}"))),
    }
}

/// Reads either a full request `{"monoid": …}` or a bare monoid spec, which
/// gets the commands `atoms` and `classify`.
pub fn parse_request(text: &str) -> CliResult<AnalysisRequest> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(schema)?;
    let mut req = if let Some(m) = v.get("monoid") {
        check_kind(m)?;
        serde_json::from_value::<AnalysisRequest>(v).map_err(schema)?
    } else {
        check_kind(&v)?;
        AnalysisRequest { monoid: serde_json::from_value(v).map_err(schema)?, window: None, commands: Vec::new() }
    };
    if req.commands.is_empty() {
        req.commands = vec![Command::Atoms, Command::Classify];
    }
    Ok(req)
}

/// Parses `a,b[,c…]`.
pub fn parse_window(text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::new(ErrorCode::BadArgument, format!("invalid window coordinate {t:?}")))
        })
        .collect()
}

pub fn build_window(bounds: &[i64], dim: usize) -> CliResult<Window> {
    if bounds.len() != dim {
        return Err(CliError::new(
            ErrorCode::SchemaViolation,
            format!("window has {} coordinates, monoid has dimension {dim}", bounds.len()),
        ));
    }
    Window::new(bounds.to_vec()).map_err(|e| CliError::new(ErrorCode::WindowTooSmall, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_specs_and_requests() {
        let r = parse_request(r#"{"kind":"leamer","gamma":[11,12,15],"step":2}"#).unwrap();
        assert_eq!(r.commands, vec![Command::Atoms, Command::Classify]);
        let r = parse_request(
            r#"{"monoid":{"kind":"builtin","tag":"doubling"},"window":[4,4],"commands":["faces",{"mu":[1,1]}]}"#,
        )
        .unwrap();
        assert_eq!(r.commands, vec![Command::Faces, Command::Mu(vec![1, 1])]);
    }

    #[test]
    fn error_codes() {
        let e = parse_request(r#"{"kind":"torus"}"#).unwrap_err();
        assert_eq!(e.code, ErrorCode::UnknownSpecKind);
        let e = parse_request(r#"{"kind":"leamer","gamma":[11,12,15]}"#).unwrap_err();
        assert_eq!(e.code, ErrorCode::SchemaViolation);
        let e = parse_request(r#"{"kind":"leamer","gamma":[2,3],"step":3}"#).unwrap().monoid.build().unwrap_err();
        assert_eq!((e.code, e.message.as_str()), (ErrorCode::InvalidSpec, "s in Gamma"));
        assert_eq!(build_window(&[0, 3], 2).unwrap_err().code, ErrorCode::WindowTooSmall);
        assert_eq!(parse_window("3,x").unwrap_err().code, ErrorCode::BadArgument);
    }

    #[test]
    fn band_bounds_parse() {
        let r = parse_request(r#"{"kind":"band","alpha":"sqrt2","beta":"sqrt(3)"}"#).unwrap();
        let m = r.monoid.build().unwrap();
        assert!(m.contains(&[2, 3]));
        assert!(!m.contains(&[1, 1]));
    }
}
