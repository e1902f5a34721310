//! Input parsing and error plumbing: coefficient sequences from flags or
//! JSON documents, rationals, bounds, and the enumeration budget.

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use mcf::{BigInt, BigRational};
use num_traits::{ToPrimitive, Zero};

/// The three coefficient sequences `(a, b, c)` as parsed from flags or JSON.
pub type Sequences = (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>);

/// A command failure. Usage errors (malformed requests) exit with code 2,
/// domain errors (well-formed requests the rules reject) with code 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Domain(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Domain(msg) => f.write_str(msg),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn domain(msg: impl Into<String>) -> CliError {
    CliError::Domain(msg.into())
}

impl From<mcf::McfError> for CliError {
    fn from(err: mcf::McfError) -> Self {
        domain(err.to_string())
    }
}

impl From<mcf::TilingError> for CliError {
    fn from(err: mcf::TilingError) -> Self {
        if matches!(err, mcf::TilingError::MixedModeRequired { .. }) {
            domain(format!(
                "{err}; signed bounds need count-mixed or enumerate --mode mixed"
            ))
        } else {
            domain(err.to_string())
        }
    }
}

impl From<mcf::ExpansionError> for CliError {
    fn from(err: mcf::ExpansionError) -> Self {
        domain(err.to_string())
    }
}

/// One coefficient entry: an integer, or `_` for a padding zero (positions
/// whose value the computation never reads).
pub fn parse_entry(raw: &str) -> Result<BigInt, CliError> {
    let text = raw.trim();
    if text == "_" {
        return Ok(BigInt::zero());
    }
    BigInt::from_str(text).map_err(|_| {
        usage(format!(
            "'{text}' is not an integer (use '_' for a padding zero)"
        ))
    })
}

/// A comma-separated coefficient sequence.
pub fn parse_sequence(raw: &str) -> Result<Vec<BigInt>, CliError> {
    raw.split(',').map(parse_entry).collect()
}

/// Sequences from `--a/--b/--c` or from a JSON document.
pub fn load_sequences(
    a: &Option<String>,
    b: &Option<String>,
    c: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<Sequences, CliError> {
    if let Some(path) = input {
        return read_json_sequences(path);
    }
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => {
            Ok((parse_sequence(a)?, parse_sequence(b)?, parse_sequence(c)?))
        }
        _ => Err(usage(
            "provide --a, --b and --c together, or --input FILE (- for stdin)",
        )),
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|err| domain(format!("cannot read stdin: {err}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path)
        .map_err(|err| domain(format!("cannot read {}: {err}", path.display())))
}

fn parse_document(path: &Path) -> Result<serde_json::Value, CliError> {
    let text = read_source(path)?;
    let doc: serde_json::Value =
        serde_json::from_str(&text).map_err(|err| usage(format!("invalid JSON input: {err}")))?;
    match doc.get("version") {
        None => Ok(doc),
        Some(v) if v.as_u64() == Some(1) => Ok(doc),
        Some(v) => Err(usage(format!(
            "unsupported input document version {v}; this build reads version 1"
        ))),
    }
}

/// Reads `{"a": […], "b": […], "c": […]}` with entries that are integers or
/// decimal strings (`"_"` again reads as a padding zero).
pub fn read_json_sequences(path: &Path) -> Result<Sequences, CliError> {
    let doc = parse_document(path)?;
    let field = |key: &str| -> Result<Vec<BigInt>, CliError> {
        doc.get(key)
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| usage(format!("JSON input needs an array field \"{key}\"")))?
            .iter()
            .map(json_entry)
            .collect()
    };
    Ok((field("a")?, field("b")?, field("c")?))
}

/// Reads `{"bounds": [[…], …]}` — one row per tile length, shortest first —
/// with an optional `"degree"` cross-checked against the row count.
pub fn read_json_bounds(path: &Path) -> Result<Vec<Vec<BigInt>>, CliError> {
    let doc = parse_document(path)?;
    let rows = doc
        .get("bounds")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| usage("JSON input needs an array field \"bounds\""))?;
    let bounds: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| usage(format!("bounds row {row} is not an array")))?
                .iter()
                .map(json_entry)
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if bounds.is_empty() {
        return Err(usage("\"bounds\" needs at least one row"));
    }
    if let Some(raw) = doc.get("degree") {
        let degree = raw
            .as_u64()
            .ok_or_else(|| usage(format!("\"degree\" {raw} is not a nonnegative integer")))?;
        let expected = degree as usize + 1;
        if expected != bounds.len() {
            return Err(usage(format!(
                "\"degree\": {degree} means {expected} bounds rows (one per tile length), found {}",
                bounds.len()
            )));
        }
    }
    Ok(bounds)
}

fn json_entry(value: &serde_json::Value) -> Result<BigInt, CliError> {
    match value {
        serde_json::Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| usage(format!("{n} is not an integer coefficient"))),
        serde_json::Value::String(s) => parse_entry(s),
        other => Err(usage(format!("{other} is not an integer coefficient"))),
    }
}

/// A value written as `p/q` or as a plain integer.
pub fn parse_rational(raw: &str) -> Result<BigRational, CliError> {
    let text = raw.trim();
    let complain = || {
        usage(format!(
            "'{text}' is not a rational; write p/q or an integer"
        ))
    };
    let (num, den) = match text.split_once('/') {
        Some((num, den)) => (num.trim(), den.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| complain())?;
    let den = BigInt::from_str(den).map_err(|_| complain())?;
    if den.is_zero() {
        return Err(usage(format!("'{text}' has a zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

/// Converts a coefficient sequence to the machine-width bounds the tiling
/// engine works in.
pub fn to_bounds(seq: &[BigInt], name: &str) -> Result<Vec<i64>, CliError> {
    seq.iter()
        .map(|x| {
            x.to_i64().ok_or_else(|| {
                domain(format!(
                    "bound {x} in sequence {name} does not fit the tiling engine's 64-bit range"
                ))
            })
        })
        .collect()
}

/// The enumeration budget: `MCF_ENUM_BUDGET` when set, the library default
/// otherwise.
pub fn enumeration_budget() -> Result<u64, CliError> {
    match std::env::var("MCF_ENUM_BUDGET") {
        Ok(raw) => raw.trim().parse::<u64>().map_err(|_| {
            usage(format!(
                "MCF_ENUM_BUDGET ('{raw}') must be an unsigned integer"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(mcf::DEFAULT_ENUM_BUDGET),
        Err(std::env::VarError::NotUnicode(_)) => Err(usage("MCF_ENUM_BUDGET is not valid UTF-8")),
    }
}

/// Formats a float with 15 significant digits.
pub fn sig15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (14 - magnitude).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}
