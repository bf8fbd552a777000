//! `chebfrac verify` — named verification sweeps with machine-readable
//! reporting. Summaries go to stdout, counterexamples to stderr; the exit
//! code is 0 exactly when every check passed.

use std::process::ExitCode;

use chebfrac_core::{
    cheb, cheb_coeffs_binomial, cheb_eval_big, f_eval, f_identity_residuals, identity_sweep,
    l_via_f, lu_check, params, power_identity_residual, quadratic_residual_sides, rat, s_closed,
    s_recursive, s_series, sequences, triangle, u_ratio_expansion, ChebKind, FParams, IdentityTag,
    Int, Rat, Result, SeqName,
};
use clap::ValueEnum;
use num_traits::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    /// The five Vajda-style identities over an (n, i, j) box.
    Vajda,
    /// The five supporting lemmas.
    Lemmas,
    /// The quadratic residual identity plus route equivalence.
    Theorem1,
    /// Structured continued-fraction values against second-kind ratios.
    Theorem5,
    /// Coefficient expansions, constancy in x, and the shift identities.
    Binom,
    /// Triangle rows, cross-checks, derived identities and sequences.
    Triangle,
    /// M = LU factorisation with unit leading determinants.
    Lu,
}

pub struct Options {
    pub suite: Suite,
    pub max_n: Option<i64>,
    pub max_ij: Option<i64>,
    pub max_d: Option<i64>,
    pub max_x: Option<i64>,
    pub size: Option<usize>,
    pub jobs: Option<usize>,
    pub json_lines: bool,
}

/// One block of checks: how many ran and which failed.
struct Outcome {
    label: String,
    checked: u64,
    failures: Vec<String>,
}

impl Outcome {
    fn new(label: impl Into<String>) -> Self {
        Outcome {
            label: label.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

/// Deterministic 64-bit generator (splitmix64); keeps randomised sweeps
/// reproducible without pulling an RNG dependency into the binary.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    fn rat(&mut self) -> Rat {
        rat(self.range(-24, 24), self.range(1, 6))
    }
}

pub fn run(opts: Options) -> Result<ExitCode> {
    if let Some(jobs) = opts.jobs {
        // an already-initialised pool is fine; the sweep still runs
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let outcomes = match opts.suite {
        Suite::Vajda => suite_vajda(&opts)?,
        Suite::Lemmas => suite_lemmas(&opts)?,
        Suite::Theorem1 => suite_theorem1(&opts)?,
        Suite::Theorem5 => suite_theorem5(&opts)?,
        Suite::Binom => suite_binom(&opts),
        Suite::Triangle => suite_triangle(&opts),
        Suite::Lu => suite_lu(&opts)?,
    };

    let mut clean = true;
    for outcome in &outcomes {
        if opts.json_lines {
            println!(
                "{{\"label\":\"{}\",\"checked\":{},\"counterexamples\":{}}}",
                outcome.label,
                outcome.checked,
                outcome.failures.len()
            );
        } else {
            println!(
                "{}: {} checks, {} counterexamples",
                outcome.label,
                outcome.checked,
                outcome.failures.len()
            );
        }
        let mut sorted = outcome.failures.clone();
        sorted.sort();
        for failure in &sorted {
            if opts.json_lines {
                eprintln!(
                    "{{\"label\":\"{}\",\"counterexample\":\"{failure}\"}}",
                    outcome.label
                );
            } else {
                eprintln!("{failure}");
            }
            clean = false;
        }
    }
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn sweep_outcome(tag: IdentityTag, bounds: &chebfrac_core::Params) -> Result<Outcome> {
    let report = identity_sweep(tag, bounds)?;
    Ok(Outcome {
        label: tag.to_string(),
        checked: report.tuples_checked,
        failures: report.counterexamples.iter().map(|c| c.line(tag)).collect(),
    })
}

fn suite_vajda(opts: &Options) -> Result<Vec<Outcome>> {
    let n = opts.max_n.unwrap_or(5);
    let ij = opts.max_ij.unwrap_or(3);
    let bounds = params(&[("n", n), ("i", ij), ("j", ij)]);
    [
        IdentityTag::VajdaUU,
        IdentityTag::VajdaTT,
        IdentityTag::VajdaTUU,
        IdentityTag::VajdaTUT,
        IdentityTag::VajdaPell,
    ]
    .iter()
    .map(|&tag| sweep_outcome(tag, &bounds))
    .collect()
}

fn suite_lemmas(opts: &Options) -> Result<Vec<Outcome>> {
    let n = opts.max_n.unwrap_or(8);
    let d = opts.max_d.unwrap_or(8);
    Ok(vec![
        sweep_outcome(IdentityTag::LemUT, &params(&[("d", d)]))?,
        sweep_outcome(IdentityTag::LemUU, &params(&[("d", d)]))?,
        sweep_outcome(IdentityTag::Lem2TU, &params(&[("n", n), ("d", d)]))?,
        sweep_outcome(IdentityTag::LemDouble, &params(&[("n", n.max(1) + 4)]))?,
        sweep_outcome(
            IdentityTag::LemCompose,
            &params(&[("n", n.max(2)), ("d", d.clamp(1, 5))]),
        )?,
    ])
}

fn suite_theorem1(opts: &Options) -> Result<Vec<Outcome>> {
    let max_n = opts.max_n.unwrap_or(5);
    let max_d = opts.max_d.unwrap_or(7);
    let mut residual = Outcome::new("quadratic-residual");
    let mut routes = Outcome::new("route-equivalence");
    for d in 1..=max_d {
        for n in 0..=max_n {
            match (d + 1).checked_pow((n + 1) as u32) {
                Some(e) if e <= 64 => {}
                _ => continue,
            }
            let (lhs, rhs) = quadratic_residual_sides(n, d)?;
            residual.check(lhs == rhs, || {
                format!("quadratic-residual n={n} d={d} cleared-sides-differ")
            });
            let series = s_series(n, d)?;
            let rec = s_recursive(n, d)?;
            let closed = s_closed(n, d)?;
            routes.check(series == rec && rec == closed, || {
                format!("routes n={n} d={d} disagree")
            });
        }
    }
    Ok(vec![residual, routes])
}

fn suite_theorem5(opts: &Options) -> Result<Vec<Outcome>> {
    let max_n = opts.max_n.unwrap_or(40);
    let max_x = opts.max_x.unwrap_or(10);
    let mut outcome = Outcome::new("structured-expansion");
    for x in 2..=max_x {
        for n in 0..=max_n {
            let cf = u_ratio_expansion(n, x)?;
            let num = cheb_eval_big(ChebKind::SecondKind, &Int::from(n), &rat(x, 1))?;
            let den = cheb_eval_big(ChebKind::SecondKind, &Int::from(n + 1), &rat(x, 1))?;
            outcome.check(cf.eval() == num / den, || {
                format!("structured-expansion n={n} x={x}")
            });
        }
    }
    Ok(vec![outcome])
}

fn suite_binom(opts: &Options) -> Vec<Outcome> {
    let max_n = opts.max_n.unwrap_or(200);
    let mut formulas = Outcome::new("coefficient-formulas");
    for kind in [ChebKind::FirstKind, ChebKind::SecondKind] {
        for n in 0..=max_n {
            let same = cheb_coeffs_binomial(kind, n).unwrap() == cheb(kind, n).unwrap();
            formulas.check(same, || format!("coeffs {kind} n={n}"));
        }
    }

    let mut constancy = Outcome::new("constant-in-x");
    let mut rng = SplitMix(0x5eed);
    for trial in 0..50 {
        let a = rng.rat();
        let d = rng.rat();
        let m = rng.range(0, 8) as u32;
        let reference = f_eval(&FParams::new(a.clone(), d.clone(), m, Rat::zero()));
        for _ in 0..5 {
            let x = rng.rat();
            let moved = f_eval(&FParams::new(a.clone(), d.clone(), m, x.clone()));
            constancy.check(moved == reference, || {
                format!("constancy trial={trial} a={a} d={d} m={m} x={x}")
            });
        }
    }

    let mut shifts = Outcome::new("shift-identities");
    for trial in 0..25 {
        let a = rng.rat();
        let d = rng.rat();
        let m = rng.range(1, 8) as u32;
        let x = rng.rat();
        let (r1, r2, r3) =
            f_identity_residuals(&FParams::new(a.clone(), d.clone(), m, x.clone())).unwrap();
        shifts.check(r1.is_zero() && r2.is_zero() && r3.is_zero(), || {
            format!("shift trial={trial} a={a} d={d} m={m} x={x}")
        });
    }
    vec![formulas, constancy, shifts]
}

fn suite_triangle(opts: &Options) -> Vec<Outcome> {
    let golden: [&[i64]; 9] = [
        &[1],
        &[-1, 1],
        &[1, 0, 1],
        &[-1, 1, 1, 1],
        &[1, 0, 2, 2, 1],
        &[-1, 1, 2, 4, 3, 1],
        &[1, 0, 3, 6, 7, 4, 1],
        &[-1, 1, 3, 9, 13, 11, 5, 1],
        &[1, 0, 4, 12, 22, 24, 16, 6, 1],
    ];
    let mut rows = Outcome::new("triangle-rows");
    let tri = triangle(9);
    for (i, want) in golden.iter().enumerate() {
        let want: Vec<Int> = want.iter().map(|&v| Int::from(v)).collect();
        rows.check(tri.rows()[i] == want, || format!("triangle row {i}"));
    }

    let max_i = opts.max_n.unwrap_or(16);
    let mut cross = Outcome::new("entries-via-sum");
    let big = triangle(max_i as usize + 1);
    for i in 0..=max_i {
        for j in 0..=i {
            for x in [rat(0, 1), rat(3, 2), rat(-5, 3)] {
                let ok = l_via_f(i, j, &x).unwrap() == Rat::from_integer(big.entry(i, j));
                cross.check(ok, || format!("l({i},{j}) at x={x}"));
            }
        }
    }

    let mut sums = Outcome::new("row-sum-recurrences");
    let s = sequences(SeqName::RowSums, 41).unwrap();
    for n in 2..=40usize {
        let two_back = s[n] == &s[n - 1] + &s[n - 2] * Int::from(2);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let one_back = s[n] == (&s[n - 1] + Int::from(sign)) * Int::from(2);
        sums.check(two_back && one_back, || format!("row sums at n={n}"));
    }

    let mut pascal = Outcome::new("binomial-splitting");
    for n in 0..=12u32 {
        for k in 0..=n + 2 {
            pascal.check(chebfrac_core::binom_l_identity(n, k).is_zero(), || {
                format!("binomial split n={n} k={k}")
            });
        }
    }

    let mut powers = Outcome::new("power-expansion");
    for n in 0..=20u32 {
        powers.check(power_identity_residual(n).is_zero(), || {
            format!("power n={n}")
        });
    }

    let mut seqs = Outcome::new("sequence-prefixes");
    let cases: [(SeqName, &[i64]); 5] = [
        (SeqName::RowSums, &[1, 0, 2, 2, 6, 10, 22]),
        (SeqName::Central, &[1, 0, 2, 6, 22, 80, 296, 1106]),
        (SeqName::WeightKPlus1, &[1, 1, 4, 8, 20, 44, 100]),
        (
            SeqName::WeightKMinus1,
            &[0, 0, 1, 3, 9, 23, 57, 135, 313, 711],
        ),
        (SeqName::Weight2KPlus1, &[1, 2, 6, 14, 34, 78, 178]),
    ];
    for (name, want) in cases {
        let got = sequences(name, want.len() as i64).unwrap();
        let want: Vec<Int> = want.iter().map(|&v| Int::from(v)).collect();
        seqs.check(got == want, || format!("sequence {name}"));
    }

    vec![rows, cross, sums, pascal, powers, seqs]
}

fn suite_lu(opts: &Options) -> Result<Vec<Outcome>> {
    let size = opts.size.unwrap_or(10);
    let mut outcome = Outcome::new("lu-factorisation");
    let alternating: Vec<Int> = (0..size)
        .map(|i| Int::from(if i % 2 == 0 { 1 } else { -1 }))
        .collect();
    let mut seeds = vec![alternating];
    let mut rng = SplitMix(0xa1fa);
    for _ in 0..5 {
        let mut alpha = vec![Int::from(1)];
        alpha.extend((1..size).map(|_| Int::from(rng.range(-9, 9))));
        seeds.push(alpha);
    }
    for alpha in &seeds {
        let report = lu_check(alpha, size)?;
        outcome.check(report.holds(), || format!("M != LU for seed {alpha:?}"));
        outcome.check(report.dets.iter().all(|d| d == &Int::from(1)), || {
            format!("non-unit leading determinant for seed {alpha:?}")
        });
    }
    Ok(vec![outcome])
}
