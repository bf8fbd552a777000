//! `chebfrac cheb` — print Chebyshev coefficients.

use std::process::ExitCode;

use chebfrac_core::{cheb, ChebKind, Result};

use crate::format::{coeffs_json_line, OutputFormat};

pub fn run(kind: &str, n: i64, format: OutputFormat) -> Result<ExitCode> {
    let kind: ChebKind = kind.parse()?;
    let poly = cheb(kind, n)?;
    // the zero polynomial cannot occur here, but degree-0 rows still need
    // one coefficient
    let coeffs = poly.coeffs();
    match format {
        OutputFormat::Plain => {
            let line = coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            println!("{line}");
        }
        OutputFormat::JsonLines => {
            println!("{}", coeffs_json_line(&kind.to_string(), n, coeffs));
        }
        OutputFormat::Csv => {
            println!("k,coeff");
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k},{c}");
            }
        }
        OutputFormat::Bfile => {
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k} {c}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
