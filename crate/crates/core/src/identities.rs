//! Polynomial identities between Chebyshev polynomials, checked exactly.
//!
//! Each identity is exposed as a residual (left side minus right side), so a
//! failing check carries the whole discrepancy instead of a bare boolean.
//! `identity_sweep` grinds a finite parameter box and reports every tuple
//! whose residual is not the zero polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::chebyshev::{cheb, ChebKind};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// The ten verified identities.
///
/// The five `Vajda*` tags are the Vajda-style analogues for Chebyshev
/// polynomials, in order: UU, TT, TU with U-style right side, TU with
/// T-style right side, and the Pell-type generalisation. The `Lem*` tags
/// are the supporting lemmas: `xU_d = U_{d-1} + T_{d+1}`,
/// `U_d^2 = U_{d-1}^2 + 2T_{d+1}U_{d-1} + 1`, `2T_dU_n = U_{n+d} + U_{n-d}`,
/// `U_{2n-1} = 2T_nU_{n-1}`, and
/// `U_{(n-1)d-1}·(U_{n-1}∘T_d) = U_{nd-1}·(U_{n-2}∘T_d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IdentityTag {
    VajdaUU,
    VajdaTT,
    VajdaTUU,
    VajdaTUT,
    VajdaPell,
    LemUT,
    LemUU,
    Lem2TU,
    LemDouble,
    LemCompose,
}

/// All tags, in the order they are documented.
pub const ALL_TAGS: [IdentityTag; 10] = [
    IdentityTag::VajdaUU,
    IdentityTag::VajdaTT,
    IdentityTag::VajdaTUU,
    IdentityTag::VajdaTUT,
    IdentityTag::VajdaPell,
    IdentityTag::LemUT,
    IdentityTag::LemUU,
    IdentityTag::Lem2TU,
    IdentityTag::LemDouble,
    IdentityTag::LemCompose,
];

impl IdentityTag {
    /// Parameter names with their domain minima, in canonical order.
    pub fn param_domain(&self) -> &'static [(&'static str, i64)] {
        match self {
            IdentityTag::VajdaUU
            | IdentityTag::VajdaTT
            | IdentityTag::VajdaTUU
            | IdentityTag::VajdaTUT
            | IdentityTag::VajdaPell => &[("n", 1), ("i", 0), ("j", 0)],
            IdentityTag::LemUT | IdentityTag::LemUU => &[("d", 1)],
            IdentityTag::Lem2TU => &[("n", 0), ("d", 0)],
            IdentityTag::LemDouble => &[("n", 1)],
            IdentityTag::LemCompose => &[("n", 2), ("d", 1)],
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            IdentityTag::VajdaUU => "VajdaUU",
            IdentityTag::VajdaTT => "VajdaTT",
            IdentityTag::VajdaTUU => "VajdaTU_U",
            IdentityTag::VajdaTUT => "VajdaTU_T",
            IdentityTag::VajdaPell => "VajdaPell",
            IdentityTag::LemUT => "LemUT",
            IdentityTag::LemUU => "LemUU",
            IdentityTag::Lem2TU => "Lem2TU",
            IdentityTag::LemDouble => "LemDouble",
            IdentityTag::LemCompose => "LemCompose",
        };
        write!(f, "{name}")
    }
}

impl FromStr for IdentityTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_TAGS
            .iter()
            .copied()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown identity tag '{s}'")))
    }
}

/// Named integer parameters, as passed from the command line.
pub type Params = BTreeMap<String, i64>;

/// Build a parameter map from pairs; test and CLI convenience.
pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn get(params: &Params, key: &'static str) -> Result<i64> {
    params.get(key).copied().ok_or(Error::MissingParam(key))
}

fn t(n: i64) -> Result<Poly> {
    cheb(ChebKind::FirstKind, n)
}

fn u(n: i64) -> Result<Poly> {
    cheb(ChebKind::SecondKind, n)
}

/// Left side minus right side of the tagged identity at the given
/// parameters. Contract: the zero polynomial everywhere in the domain.
pub fn identity_residual(tag: IdentityTag, params: &Params) -> Result<Poly> {
    match tag {
        IdentityTag::VajdaUU
        | IdentityTag::VajdaTT
        | IdentityTag::VajdaTUU
        | IdentityTag::VajdaTUT
        | IdentityTag::VajdaPell => {
            let n = get(params, "n")?;
            let i = get(params, "i")?;
            let j = get(params, "j")?;
            if n < 1 {
                return Err(Error::Domain(format!("{tag} requires n >= 1, got n = {n}")));
            }
            if i < 0 || j < 0 {
                return Err(Error::Domain(format!(
                    "{tag} requires i, j >= 0, got i = {i}, j = {j}"
                )));
            }
            vajda_residual(tag, n, i, j)
        }
        IdentityTag::LemUT | IdentityTag::LemUU => {
            let d = get(params, "d")?;
            if d < 1 {
                return Err(Error::Domain(format!("{tag} requires d >= 1, got d = {d}")));
            }
            if tag == IdentityTag::LemUT {
                // x U_d - U_{d-1} - T_{d+1}
                let lhs = u(d)?.shift(1);
                Ok(&(&lhs - &u(d - 1)?) - &t(d + 1)?)
            } else {
                // U_d^2 - U_{d-1}^2 - 2 T_{d+1} U_{d-1} - 1
                let ud = u(d)?;
                let um = u(d - 1)?;
                let cross = (&t(d + 1)? * &um).scale(&2.into());
                Ok(&(&(&(&ud * &ud) - &(&um * &um)) - &cross) - &Poly::one())
            }
        }
        IdentityTag::Lem2TU => {
            let n = get(params, "n")?;
            let d = get(params, "d")?;
            if n < 0 {
                return Err(Error::Domain(format!(
                    "Lem2TU requires n >= 0, got n = {n}"
                )));
            }
            if d < 0 || d > n {
                return Err(Error::Domain(format!(
                    "Lem2TU requires 0 <= d <= n, got n = {n}, d = {d}"
                )));
            }
            // 2 T_d U_n - U_{n+d} - U_{n-d}
            let lhs = (&t(d)? * &u(n)?).scale(&2.into());
            Ok(&(&lhs - &u(n + d)?) - &u(n - d)?)
        }
        IdentityTag::LemDouble => {
            let n = get(params, "n")?;
            if n < 1 {
                return Err(Error::Domain(format!(
                    "LemDouble requires n >= 1, got n = {n}"
                )));
            }
            // U_{2n-1} - 2 T_n U_{n-1}
            let rhs = (&t(n)? * &u(n - 1)?).scale(&2.into());
            Ok(&u(2 * n - 1)? - &rhs)
        }
        IdentityTag::LemCompose => {
            let n = get(params, "n")?;
            let d = get(params, "d")?;
            if n < 2 {
                return Err(Error::Domain(format!(
                    "LemCompose requires n >= 2, got n = {n}"
                )));
            }
            if d < 1 {
                return Err(Error::Domain(format!(
                    "LemCompose requires d >= 1, got d = {d}"
                )));
            }
            // U_{(n-1)d-1}·(U_{n-1}∘T_d) - U_{nd-1}·(U_{n-2}∘T_d)
            let td = t(d)?;
            let lhs = &u((n - 1) * d - 1)? * &u(n - 1)?.compose(&td);
            let rhs = &u(n * d - 1)? * &u(n - 2)?.compose(&td);
            Ok(&lhs - &rhs)
        }
    }
}

fn vajda_residual(tag: IdentityTag, n: i64, i: i64, j: i64) -> Result<Poly> {
    match tag {
        IdentityTag::VajdaUU => {
            // U_{n+i} U_{n+j} - U_{n-1} U_{n+1+i+j} = U_i U_j
            let lhs = &(&u(n + i)? * &u(n + j)?) - &(&u(n - 1)? * &u(n + 1 + i + j)?);
            Ok(&lhs - &(&u(i)? * &u(j)?))
        }
        IdentityTag::VajdaTT => {
            // T_{n+i} T_{n+j} - T_{n-1} T_{n+1+i+j} = (1 - x^2) U_i U_j
            let lhs = &(&t(n + i)? * &t(n + j)?) - &(&t(n - 1)? * &t(n + 1 + i + j)?);
            let weight = Poly::from_coeffs(&[1, 0, -1]);
            Ok(&lhs - &(&weight * &(&u(i)? * &u(j)?)))
        }
        IdentityTag::VajdaTUU => {
            // T_{n+i} U_{n+j} - U_{n-1} T_{n+1+i+j} = T_i U_j
            let lhs = &(&t(n + i)? * &u(n + j)?) - &(&u(n - 1)? * &t(n + 1 + i + j)?);
            Ok(&lhs - &(&t(i)? * &u(j)?))
        }
        IdentityTag::VajdaTUT => {
            // T_{n+i} U_{n+j} - T_{n-1} U_{n+1+i+j} = -U_i T_{j+2}
            // (asymmetric in i and j, as stated)
            let lhs = &(&t(n + i)? * &u(n + j)?) - &(&t(n - 1)? * &u(n + 1 + i + j)?);
            Ok(&lhs + &(&u(i)? * &t(j + 2)?))
        }
        IdentityTag::VajdaPell => {
            // T_{n+i} T_{n+j} - (x^2 - 1) U_{n-1} U_{n-1+i+j} = T_i T_j
            let weight = Poly::from_coeffs(&[-1, 0, 1]);
            let lhs = &(&t(n + i)? * &t(n + j)?) - &(&weight * &(&u(n - 1)? * &u(n - 1 + i + j)?));
            Ok(&lhs - &(&t(i)? * &t(j)?))
        }
        _ => unreachable!("vajda_residual called with a lemma tag"),
    }
}

/// One parameter tuple whose residual failed to vanish.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub params: Vec<(String, i64)>,
    pub residual_degree: i64,
}

impl Counterexample {
    /// `tag params residual-degree`, one line.
    pub fn line(&self, tag: IdentityTag) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!("{tag} {params} {}", self.residual_degree)
    }

    /// One JSON object on one line.
    pub fn json_line(&self, tag: IdentityTag) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("\"{k}\":{v}"))
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"tag\":\"{tag}\",\"params\":{{{params}}},\"residual_degree\":{}}}",
            self.residual_degree
        )
    }
}

/// Outcome of an exhaustive check over a parameter box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepReport {
    pub tag: IdentityTag,
    pub tuples_checked: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} tuples checked, {} counterexamples",
            self.tag,
            self.tuples_checked,
            self.counterexamples.len()
        )
    }

    pub fn summary_json_line(&self) -> String {
        format!(
            "{{\"tag\":\"{}\",\"tuples_checked\":{},\"counterexamples\":{}}}",
            self.tag,
            self.tuples_checked,
            self.counterexamples.len()
        )
    }
}

/// Exhaustively check every tuple of the box `domain minimum ..= bound`
/// for each named parameter. Bounds below the domain minimum are malformed.
pub fn identity_sweep(tag: IdentityTag, bounds: &Params) -> Result<SweepReport> {
    let domain = tag.param_domain();
    let mut ranges = Vec::with_capacity(domain.len());
    for (name, min) in domain {
        let max = get(bounds, name)?;
        if max < *min {
            return Err(Error::Domain(format!(
                "bound {name} <= {max} lies below the domain minimum {min} for {tag}"
            )));
        }
        ranges.push((*name, *min, max));
    }
    let tuples = enumerate_tuples(tag, &ranges);
    let mut counterexamples: Vec<Counterexample> = tuples
        .par_iter()
        .filter_map(|tuple| {
            let p: Params = tuple.iter().map(|(k, v)| (k.to_string(), *v)).collect();
            let residual = identity_residual(tag, &p).expect("tuples come from the domain");
            if residual.is_zero() {
                None
            } else {
                Some(Counterexample {
                    params: tuple.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                    residual_degree: residual.degree(),
                })
            }
        })
        .collect();
    counterexamples.sort_by(|a, b| a.params.cmp(&b.params));
    Ok(SweepReport {
        tag,
        tuples_checked: tuples.len() as u64,
        counterexamples,
    })
}

fn enumerate_tuples(
    tag: IdentityTag,
    ranges: &[(&'static str, i64, i64)],
) -> Vec<Vec<(&'static str, i64)>> {
    let mut tuples = vec![Vec::new()];
    for (name, min, max) in ranges {
        let mut next = Vec::new();
        for tuple in &tuples {
            for v in *min..=*max {
                let mut extended = tuple.clone();
                extended.push((*name, v));
                next.push(extended);
            }
        }
        tuples = next;
    }
    if tag == IdentityTag::Lem2TU {
        // the coupled constraint d <= n trims the rectangular box
        tuples.retain(|tuple| {
            let n = tuple.iter().find(|(k, _)| *k == "n").unwrap().1;
            let d = tuple.iter().find(|(k, _)| *k == "d").unwrap().1;
            d <= n
        });
    }
    tuples
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_residuals_vanish() {
        let cases: &[(IdentityTag, &[(&str, i64)])] = &[
            (IdentityTag::VajdaUU, &[("n", 1), ("i", 0), ("j", 0)]),
            (IdentityTag::VajdaPell, &[("n", 1), ("i", 0), ("j", 0)]),
            (IdentityTag::LemDouble, &[("n", 1)]),
            (IdentityTag::Lem2TU, &[("n", 3), ("d", 3)]),
            (IdentityTag::VajdaTUT, &[("n", 2), ("i", 1), ("j", 3)]),
            (IdentityTag::LemCompose, &[("n", 4), ("d", 3)]),
        ];
        for (tag, pairs) in cases {
            let residual = identity_residual(*tag, &params(pairs)).unwrap();
            assert!(residual.is_zero(), "{tag} at {pairs:?}: {residual}");
        }
    }

    #[test]
    fn domain_violations_are_reported() {
        let err = identity_residual(
            IdentityTag::VajdaUU,
            &params(&[("n", 0), ("i", 0), ("j", 0)]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("n >= 1")));
        let err =
            identity_residual(IdentityTag::Lem2TU, &params(&[("n", 2), ("d", 3)])).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("d <= n")));
        let err = identity_residual(IdentityTag::LemUT, &params(&[("n", 3)])).unwrap_err();
        assert_eq!(err, Error::MissingParam("d"));
    }

    #[test]
    fn sweep_counts_match_boxes() {
        let report = identity_sweep(
            IdentityTag::VajdaUU,
            &params(&[("n", 6), ("i", 4), ("j", 4)]),
        )
        .unwrap();
        assert_eq!(report.tuples_checked, 150);
        assert!(report.is_clean());

        let report =
            identity_sweep(IdentityTag::LemCompose, &params(&[("n", 6), ("d", 5)])).unwrap();
        assert_eq!(report.tuples_checked, 25);
        assert!(report.is_clean());

        let report = identity_sweep(
            IdentityTag::VajdaTUT,
            &params(&[("n", 5), ("i", 3), ("j", 3)]),
        )
        .unwrap();
        assert_eq!(report.tuples_checked, 80);
        assert!(report.is_clean());
    }

    #[test]
    fn malformed_bounds_rejected() {
        let err =
            identity_sweep(IdentityTag::LemCompose, &params(&[("n", 1), ("d", 5)])).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        let err = identity_sweep(IdentityTag::VajdaUU, &params(&[("n", 3)])).unwrap_err();
        assert_eq!(err, Error::MissingParam("i"));
    }

    #[test]
    fn cassini_simpson_specialisation() {
        // residual(VajdaUU, n, 0, 0) = 0 means U_n^2 - U_{n+1}U_{n-1} = 1;
        // check the classical form independently of the residual plumbing
        for n in 1..=40 {
            let un = u(n).unwrap();
            let direct = &(&un * &un) - &(&u(n + 1).unwrap() * &u(n - 1).unwrap());
            assert_eq!(direct, Poly::one(), "n = {n}");
            let residual = identity_residual(
                IdentityTag::VajdaUU,
                &params(&[("n", n), ("i", 0), ("j", 0)]),
            )
            .unwrap();
            assert!(residual.is_zero());
        }
    }

    /// Flipping any single sign on a right side must produce a nonzero
    /// residual somewhere in the sweep box, so the suite cannot pass
    /// vacuously.
    #[test]
    fn mutated_identities_fail() {
        type Mutant = fn(i64, i64, i64) -> Poly;
        // each mutant is the residual with exactly one sign flipped
        let mutants: &[(&str, Mutant)] = &[
            ("VajdaUU with +U_iU_j", |n, i, j| {
                let lhs = &(&u(n + i).unwrap() * &u(n + j).unwrap())
                    - &(&u(n - 1).unwrap() * &u(n + 1 + i + j).unwrap());
                &lhs + &(&u(i).unwrap() * &u(j).unwrap())
            }),
            ("VajdaTT with (x^2-1) weight", |n, i, j| {
                let lhs = &(&t(n + i).unwrap() * &t(n + j).unwrap())
                    - &(&t(n - 1).unwrap() * &t(n + 1 + i + j).unwrap());
                let weight = Poly::from_coeffs(&[-1, 0, 1]);
                &lhs - &(&weight * &(&u(i).unwrap() * &u(j).unwrap()))
            }),
            ("VajdaTU_U with -T_iU_j flipped", |n, i, j| {
                let lhs = &(&t(n + i).unwrap() * &u(n + j).unwrap())
                    - &(&u(n - 1).unwrap() * &t(n + 1 + i + j).unwrap());
                &lhs + &(&t(i).unwrap() * &u(j).unwrap())
            }),
            ("VajdaTU_T with +U_iT_{j+2} flipped", |n, i, j| {
                let lhs = &(&t(n + i).unwrap() * &u(n + j).unwrap())
                    - &(&t(n - 1).unwrap() * &u(n + 1 + i + j).unwrap());
                &lhs - &(&u(i).unwrap() * &t(j + 2).unwrap())
            }),
            ("VajdaPell with +T_iT_j flipped", |n, i, j| {
                let weight = Poly::from_coeffs(&[-1, 0, 1]);
                let lhs = &(&t(n + i).unwrap() * &t(n + j).unwrap())
                    - &(&weight * &(&u(n - 1).unwrap() * &u(n - 1 + i + j).unwrap()));
                &lhs + &(&t(i).unwrap() * &t(j).unwrap())
            }),
        ];
        for (label, mutant) in mutants {
            let mut found_nonzero = false;
            'outer: for n in 1..=4 {
                for i in 0..=2 {
                    for j in 0..=2 {
                        if !mutant(n, i, j).is_zero() {
                            found_nonzero = true;
                            break 'outer;
                        }
                    }
                }
            }
            assert!(found_nonzero, "mutant '{label}' passed everywhere");
        }

        // lemma mutants, one sign flip each
        assert!(!(&(&u(5).unwrap().shift(1) - &u(4).unwrap()) + &t(6).unwrap()).is_zero());
        let rhs = (&t(3).unwrap() * &u(2).unwrap()).scale(&2.into());
        assert!(!(&u(5).unwrap() + &rhs).is_zero());
    }

    #[test]
    fn report_lines() {
        let ce = Counterexample {
            params: vec![("n".into(), 2), ("i".into(), 1)],
            residual_degree: 5,
        };
        assert_eq!(ce.line(IdentityTag::VajdaUU), "VajdaUU n=2 i=1 5");
        assert_eq!(
            ce.json_line(IdentityTag::VajdaUU),
            "{\"tag\":\"VajdaUU\",\"params\":{\"n\":2,\"i\":1},\"residual_degree\":5}"
        );
    }
}
