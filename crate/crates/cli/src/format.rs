//! Output formats and the JSON-lines encoding used across subcommands.
//!
//! JSON numbers are emitted with arbitrary precision (no f64 round-trip),
//! so integer coefficients of any size survive a parse→emit cycle exactly.

use std::str::FromStr;

use chebfrac_core::{Int, Rat};
use clap::ValueEnum;
use serde_json::{json, Number, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    /// Space-separated values on one line.
    Plain,
    /// One JSON object per line.
    #[value(name = "json_lines")]
    JsonLines,
    /// Comma-separated values with a header row.
    Csv,
    /// `n value` pairs, one per line, starting at n = 0.
    Bfile,
}

/// A big integer as an exact JSON number.
pub fn json_int(v: &Int) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal is a JSON number"))
}

/// A rational as a JSON string `"num/den"` (integers stay bare).
pub fn json_rat(v: &Rat) -> Value {
    Value::String(v.to_string())
}

pub fn coeffs_json_line(kind: &str, n: i64, coeffs: &[Int]) -> String {
    let coeffs: Vec<Value> = coeffs.iter().map(json_int).collect();
    json!({ "kind": kind, "n": n, "coeffs": coeffs }).to_string()
}

/// Parse one coefficient object back; the inverse of [`coeffs_json_line`].
#[cfg(test)]
pub fn parse_coeffs_json_line(line: &str) -> Option<(String, i64, Vec<Int>)> {
    let value: Value = serde_json::from_str(line).ok()?;
    let obj = value.as_object()?;
    let kind = obj.get("kind")?.as_str()?.to_string();
    let n = obj.get("n")?.as_i64()?;
    let coeffs = obj
        .get("coeffs")?
        .as_array()?
        .iter()
        .map(value_to_int)
        .collect::<Option<Vec<_>>>()?;
    Some((kind, n, coeffs))
}

#[cfg(test)]
pub fn value_to_int(v: &Value) -> Option<Int> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    Rat::from_str(s).ok()
}
