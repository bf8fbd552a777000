//! `chebfrac seq` — emit triangle-derived sequences and diff against
//! local OEIS-style b-files.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use chebfrac_core::{sequences, Error, Int, Result, SeqName};
use serde_json::json;

use crate::format::{json_int, OutputFormat};

pub fn run(
    name: &str,
    count: i64,
    format: OutputFormat,
    compare: Option<&Path>,
    shift: i64,
) -> Result<ExitCode> {
    let name: SeqName = name.parse()?;
    let values = sequences(name, count)?;

    if let Some(path) = compare {
        return diff_bfile(name, &values, path, shift);
    }

    match format {
        OutputFormat::Plain => {
            let line = values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            println!("{line}");
        }
        OutputFormat::Bfile => {
            for (n, v) in values.iter().enumerate() {
                println!("{n} {v}");
            }
        }
        OutputFormat::Csv => {
            println!("n,value");
            for (n, v) in values.iter().enumerate() {
                println!("{n},{v}");
            }
        }
        OutputFormat::JsonLines => {
            for (n, v) in values.iter().enumerate() {
                println!(
                    "{}",
                    json!({ "name": name.to_string(), "n": n, "value": json_int(v) })
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Compare term `a(n)` against the b-file entry at index `n + shift`.
/// Reports the first mismatch and exits 1; missing indices count as
/// mismatches.
fn diff_bfile(name: SeqName, values: &[Int], path: &Path, shift: i64) -> Result<ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    let mut file_terms: BTreeMap<i64, Int> = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val)) = (parts.next(), parts.next()) else {
            return Err(Error::Domain(format!(
                "{}:{}: expected 'n value'",
                path.display(),
                lineno + 1
            )));
        };
        let idx: i64 = idx
            .parse()
            .map_err(|_| Error::Domain(format!("bad index '{idx}' in b-file")))?;
        let val: Int = val
            .parse()
            .map_err(|_| Error::Domain(format!("bad value '{val}' in b-file")))?;
        file_terms.insert(idx, val);
    }

    for (n, ours) in values.iter().enumerate() {
        let file_index = n as i64 + shift;
        match file_terms.get(&file_index) {
            Some(theirs) if theirs == ours => {}
            Some(theirs) => {
                eprintln!(
                    "mismatch at n={n}: {name} gives {ours}, b-file index {file_index} has {theirs}"
                );
                return Ok(ExitCode::from(1));
            }
            None => {
                eprintln!("b-file has no index {file_index} (needed for n={n})");
                return Ok(ExitCode::from(1));
            }
        }
    }
    println!(
        "OK: {} terms of {name} match {} with shift {shift}",
        values.len(),
        path.display()
    );
    Ok(ExitCode::SUCCESS)
}
