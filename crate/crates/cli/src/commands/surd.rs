//! `chebfrac surd` — exact approximant values with gap certificates.

use std::process::ExitCode;

use chebfrac_core::{
    convergents, gap_certificate, s_eval, s_series, surd_expand, u_ratio_expansion, Error, Rat,
    Result, SYMBOLIC_GUARD,
};
use clap::ValueEnum;
use num_traits::{Signed, ToPrimitive};
use serde_json::json;

use crate::format::{json_rat, parse_rat, OutputFormat};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Method {
    /// Evaluate the defining sum symbolically, then substitute x.
    Series,
    /// Evaluate the closed-form fraction directly (fast at any index).
    Closed,
    /// Build the structured continued fraction and locate the value among
    /// the surd's convergents. Integer x >= 2 only.
    Cf,
}

pub fn run(x_text: &str, n: i64, d: i64, method: Method, format: OutputFormat) -> Result<ExitCode> {
    let x: Rat =
        parse_rat(x_text).ok_or_else(|| Error::Domain(format!("cannot parse x = '{x_text}'")))?;
    if x.abs() <= Rat::from_integer(1.into()) {
        return Err(Error::Domain(format!(
            "surd approximants need |x| > 1, got x = {x}"
        )));
    }
    let gap = gap_certificate(n, d, &x)?;

    let mut convergent_index = None;
    let mut expansion_text = None;
    let value = match method {
        Method::Closed => s_eval(n, d, &x)?,
        Method::Series => {
            let symbolic = s_series(n, d)?;
            symbolic.eval(&x)?
        }
        Method::Cf => {
            if !x.is_integer() || x < Rat::from_integer(2.into()) {
                return Err(Error::Domain(format!(
                    "the continued-fraction route needs an integer x >= 2, got x = {x}"
                )));
            }
            let x_int = x.to_integer().to_i64().ok_or_else(|| {
                Error::Domain("x is too large for the continued-fraction route".into())
            })?;
            let big_n = (d + 1)
                .checked_pow(u32::try_from(n + 1).unwrap_or(u32::MAX))
                .filter(|&e| (e as u128) <= SYMBOLIC_GUARD)
                .ok_or(Error::DegreeOverflow {
                    requested: u128::MAX,
                    limit: SYMBOLIC_GUARD,
                })?;
            let cf = u_ratio_expansion(big_n - 2, x_int)?;
            let value = cf.eval();
            // the approximant is a convergent of the surd itself: find it
            let prefix = surd_expand(x_int, cf.len() as i64 + 2)?;
            let position = convergents(&prefix)
                .iter()
                .position(|c| c == &value)
                .expect("approximant must appear among the surd's convergents");
            convergent_index = Some(position);
            expansion_text = Some(prefix.to_string());
            value
        }
    };

    match format {
        OutputFormat::JsonLines => {
            let mut obj = json!({
                "n": n,
                "d": d,
                "x": json_rat(&x),
                "method": format!("{method:?}").to_lowercase(),
                "value": json_rat(&value),
                "gap": json_rat(&gap),
            });
            if let Some(idx) = convergent_index {
                obj["convergent_index"] = json!(idx);
                obj["expansion"] = json!(expansion_text.as_deref().unwrap());
            }
            println!("{obj}");
        }
        _ => {
            println!("value = {value}");
            println!("gap = {gap}");
            if let Some(idx) = convergent_index {
                println!(
                    "convergent #{idx} of {}",
                    expansion_text.as_deref().unwrap()
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
