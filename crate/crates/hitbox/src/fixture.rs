//! Fixture files: `P`, `D`, `S` and an optional reference group, as JSON.

use std::fmt;
use std::path::Path;

use hitbox_core::curves::{RationalMap, UniRatFn};
use hitbox_core::galois::TransitiveTables;
use hitbox_core::hit::{check_degree_structure, GroupRef, HitData, Provenance};
use hitbox_core::poly::parse::{parse_bipoly, parse_ratfn, parse_rational, ParseError};
use hitbox_core::poly::RatFn2;
use hitbox_core::{BiPoly, Rational};
use serde::{Deserialize, Serialize};

/// Fixtures compiled into the binary, addressable by name.
pub const BUNDLED: [(&str, &str); 3] = [
    ("serre-a4", include_str!("../fixtures/serre-a4.json")),
    ("fermat-x6", include_str!("../fixtures/fermat-x6.json")),
    ("toy", include_str!("../fixtures/toy.json")),
];

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "D")]
    pub d: Vec<String>,
    #[serde(rename = "S")]
    pub s: Vec<String>,
    #[serde(rename = "G_order", default, skip_serializing_if = "Option::is_none")]
    pub g_order: Option<usize>,
    #[serde(rename = "G_label", default, skip_serializing_if = "Option::is_none")]
    pub g_label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<ParamFile>,
    #[serde(default)]
    pub notes: Vec<String>,
}

/// A rational parametrization `V -> (T, X)` of one auxiliary curve.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamFile {
    /// Index into `S`.
    pub auxiliary: usize,
    pub psi: Vec<String>,
    pub phi: String,
}

#[derive(Clone, Debug)]
pub struct Parametrization {
    pub auxiliary: usize,
    pub psi: RationalMap,
    pub phi: RatFn2,
}

/// A validated fixture.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub data: HitData,
    /// `None` when the file gives neither `G_order` nor `G_label`.
    pub reference: Option<GroupRef>,
    pub parametrization: Option<Parametrization>,
    pub notes: Vec<String>,
    /// Non-fatal findings, such as an empty `S`.
    pub warnings: Vec<String>,
}

#[derive(Debug)]
pub enum FixtureError {
    NotFound(String),
    Io(String),
    /// Malformed JSON, with line and column.
    Json { line: usize, column: usize, msg: String },
    /// A polynomial or rational field that does not parse.
    Parse { field: String, err: ParseError },
    Invalid(String),
}

impl FixtureError {
    pub fn is_parse(&self) -> bool {
        matches!(self, FixtureError::Json { .. } | FixtureError::Parse { .. })
    }
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::NotFound(s) => write!(f, "fixture not found: {s}"),
            FixtureError::Io(s) => write!(f, "cannot read fixture: {s}"),
            FixtureError::Json { line, column, msg } => write!(f, "fixture JSON at line {line}, column {column}: {msg}"),
            FixtureError::Parse { field, err } => write!(f, "fixture field {field}: {err}"),
            FixtureError::Invalid(s) => write!(f, "invalid fixture: {s}"),
        }
    }
}

impl std::error::Error for FixtureError {}

fn invalid(msg: impl Into<String>) -> FixtureError {
    FixtureError::Invalid(msg.into())
}

/// Resolves `source` as a path, then as a path with `.json` appended, then
/// by its file stem against the bundled fixtures. Returns the display
/// name and the JSON text.
pub fn resolve(source: &str) -> Result<(String, String), FixtureError> {
    for candidate in [source.to_string(), format!("{source}.json")] {
        let path = Path::new(&candidate);
        if path.is_file() {
            let text = std::fs::read_to_string(path).map_err(|e| FixtureError::Io(format!("{candidate}: {e}")))?;
            let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(source).to_string();
            return Ok((stem, text));
        }
    }
    let stem = Path::new(source)
        .file_name()
        .and_then(|s| s.to_str())
        .map(|s| s.trim_end_matches(".json"))
        .unwrap_or(source);
    BUNDLED
        .iter()
        .find(|(name, _)| *name == stem)
        .map(|(name, text)| (name.to_string(), text.to_string()))
        .ok_or_else(|| FixtureError::NotFound(source.to_string()))
}

pub fn load(source: &str, tables: &TransitiveTables) -> Result<Fixture, FixtureError> {
    let (stem, text) = resolve(source)?;
    from_json(&stem, &text, tables)
}

pub fn from_json(default_name: &str, text: &str, tables: &TransitiveTables) -> Result<Fixture, FixtureError> {
    let file: FixtureFile = serde_json::from_str(text).map_err(|e| FixtureError::Json {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    validate(default_name, file, tables)
}

fn poly_field(field: String, src: &str) -> Result<BiPoly, FixtureError> {
    parse_bipoly(src).map_err(|err| FixtureError::Parse { field, err })
}

pub fn validate(default_name: &str, file: FixtureFile, tables: &TransitiveTables) -> Result<Fixture, FixtureError> {
    let name = file.name.clone().unwrap_or_else(|| default_name.to_string());
    let p = poly_field("P".into(), &file.p)?;
    let s = file
        .s
        .iter()
        .enumerate()
        .map(|(i, src)| poly_field(format!("S[{i}]"), src))
        .collect::<Result<Vec<_>, _>>()?;
    let data = HitData::new(p, s, Provenance::Fixture).map_err(|e| invalid(e.to_string()))?;

    let mut declared = file
        .d
        .iter()
        .enumerate()
        .map(|(i, src)| parse_rational(src).map_err(|err| FixtureError::Parse { field: format!("D[{i}]"), err }))
        .collect::<Result<Vec<Rational>, _>>()?;
    declared.sort();
    declared.dedup();
    if declared != data.d {
        return Err(invalid(format!(
            "declared D = {{{}}} but the discriminant and leading-coefficient roots give {{{}}}",
            join(&declared),
            join(&data.d)
        )));
    }

    let reference = match (file.g_order, &file.g_label) {
        (None, None) => None,
        (order, Some(label)) => {
            let entry = tables
                .by_label(label)
                .ok_or_else(|| invalid(format!("unknown group label {label}")))?;
            Some(GroupRef {
                order: order.unwrap_or_else(|| entry.order()),
                label: Some(label.clone()),
                derived: false,
            })
        }
        (Some(order), None) => Some(GroupRef {
            order,
            label: None,
            derived: false,
        }),
    };
    if let Some(r) = &reference {
        if r.order == 0 {
            return Err(invalid("G_order must be positive"));
        }
        check_degree_structure(&data.s, r, tables).map_err(|e| invalid(e.to_string()))?;
    }

    let mut warnings = Vec::new();
    if data.s.is_empty() {
        warnings.push("S is empty: no maximal subgroup data".to_string());
    }

    let parametrization = file
        .parametrization
        .as_ref()
        .map(|pf| parse_parametrization(pf, data.s.len()))
        .transpose()?;

    Ok(Fixture {
        name,
        data,
        reference,
        parametrization,
        notes: file.notes,
        warnings,
    })
}

fn parse_parametrization(pf: &ParamFile, s_len: usize) -> Result<Parametrization, FixtureError> {
    if pf.auxiliary >= s_len {
        return Err(invalid(format!("parametrization refers to S[{}], but S has {s_len} entries", pf.auxiliary)));
    }
    if pf.psi.len() != 2 {
        return Err(invalid("psi must have exactly two components (T and X)"));
    }
    let components = pf
        .psi
        .iter()
        .enumerate()
        .map(|(i, src)| {
            let field = format!("parametrization.psi[{i}]");
            let r = parse_ratfn(src, "V", "X").map_err(|err| FixtureError::Parse { field: field.clone(), err })?;
            match UniRatFn::from_ratfn2(&r) {
                Some(Ok(u)) => Ok(u),
                Some(Err(e)) => Err(invalid(format!("{field}: {e}"))),
                None => Err(invalid(format!("{field} must depend on V only"))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let psi = RationalMap::new(components).map_err(|e| invalid(e.to_string()))?;
    let phi = parse_ratfn(&pf.phi, "T", "X").map_err(|err| FixtureError::Parse {
        field: "parametrization.phi".into(),
        err,
    })?;
    Ok(Parametrization {
        auxiliary: pf.auxiliary,
        psi,
        phi,
    })
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")
}
