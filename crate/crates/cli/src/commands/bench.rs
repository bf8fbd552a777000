//! `chebfrac bench` — wall-clock comparison of evaluation routes.
//!
//! Values are asserted equal across routes before any time is printed, so
//! a reported speedup can never hide a wrong answer. Output is CSV:
//! `task,n,d,x,nanoseconds` (d is 0 where it does not apply).

use std::process::ExitCode;
use std::time::Instant;

use chebfrac_core::{
    cheb_eval_big, cheb_eval_elem, rat, s_closed, s_eval, s_series, ChebKind, Error, Int, ModRing,
    Rat, Result, Ring,
};
use clap::ValueEnum;
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Task {
    /// Linear three-term recurrence on exact values.
    #[value(name = "eval_recurrence")]
    EvalRecurrence,
    /// O(log n) transfer-matrix powering.
    #[value(name = "eval_matrix_power")]
    EvalMatrixPower,
    /// Symbolic construction by the defining sum vs the closed form.
    #[value(name = "s_series_vs_closed")]
    SSeriesVsClosed,
}

/// Largest index evaluated exactly; beyond it the matrix-power task
/// switches to modular rings (the digit count of the exact value grows
/// linearly with n, which no algorithm can outrun).
const EXACT_LIMIT: u64 = 2_000_000;

/// Parse `1000000`, `10^9`, or `2^20`.
fn parse_index(text: &str) -> Result<u64> {
    let parse_u64 = |s: &str| -> Result<u64> {
        s.parse()
            .map_err(|_| Error::Domain(format!("cannot parse index '{text}'")))
    };
    match text.split_once('^') {
        Some((base, exp)) => {
            let base = parse_u64(base)?;
            let exp = u32::try_from(parse_u64(exp)?)
                .map_err(|_| Error::Domain(format!("exponent too large in '{text}'")))?;
            base.checked_pow(exp)
                .ok_or_else(|| Error::Domain(format!("index '{text}' overflows 64 bits")))
        }
        None => parse_u64(text),
    }
}

fn csv_row(task: &str, n: u64, d: i64, x: i64, nanos: u128) {
    println!("{task},{n},{d},{x},{nanos}");
}

pub fn run(task: Task, n_text: &str, d: i64, x: i64) -> Result<ExitCode> {
    let n = parse_index(n_text)?;
    println!("task,n,d,x,nanoseconds");
    match task {
        Task::EvalRecurrence => eval_recurrence(n, x),
        Task::EvalMatrixPower => eval_matrix_power(n, x),
        Task::SSeriesVsClosed => series_vs_closed(n, d, x),
    }
}

fn eval_recurrence(n: u64, x: i64) -> Result<ExitCode> {
    if n > 20_000_000 {
        return Err(Error::Domain(format!(
            "n = {n} is too large for the stepwise recurrence; use eval_matrix_power"
        )));
    }
    let started = Instant::now();
    let two_x = Int::from(2 * x);
    let mut prev = Int::zero(); // U_{-1}
    let mut cur = Int::one(); // U_0
    for _ in 0..n {
        let next = &two_x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    let elapsed = started.elapsed();

    let via_matrix = cheb_eval_big(ChebKind::SecondKind, &Int::from(n), &rat(x, 1))?;
    assert_eq!(
        Rat::from_integer(cur),
        via_matrix,
        "recurrence and matrix power disagree at n={n}, x={x}"
    );
    csv_row("eval_recurrence", n, 0, x, elapsed.as_nanos());
    Ok(ExitCode::SUCCESS)
}

fn eval_matrix_power(n: u64, x: i64) -> Result<ExitCode> {
    if n <= EXACT_LIMIT {
        let started = Instant::now();
        let u_n = cheb_eval_big(ChebKind::SecondKind, &Int::from(n), &rat(x, 1))?;
        let elapsed = started.elapsed();
        if n >= 1 {
            // doubling consistency: U_{2n-1} = 2 T_n U_{n-1}, all exact
            let u_2nm1 = cheb_eval_big(ChebKind::SecondKind, &Int::from(2 * n - 1), &rat(x, 1))?;
            let t_n = cheb_eval_big(ChebKind::FirstKind, &Int::from(n), &rat(x, 1))?;
            let u_nm1 = cheb_eval_big(ChebKind::SecondKind, &Int::from(n - 1), &rat(x, 1))?;
            assert_eq!(
                u_2nm1,
                rat(2, 1) * &t_n * &u_nm1,
                "doubling identity failed at n={n}, x={x}"
            );
            // and the three-term recurrence one step up
            let u_np1 = cheb_eval_big(ChebKind::SecondKind, &Int::from(n + 1), &rat(x, 1))?;
            assert_eq!(u_np1, rat(2 * x, 1) * &u_n - &u_nm1);
        }
        csv_row("eval_matrix_power", n, 0, x, elapsed.as_nanos());
        return Ok(ExitCode::SUCCESS);
    }

    // beyond the exact limit: unit-cost ring operations in Z/p, identity
    // checks still exact (ring equality, several large prime moduli)
    let moduli: [u64; 3] = [
        (1 << 61) - 1,
        999_999_999_999_999_989,
        9_223_372_036_854_775_783,
    ];
    let started = Instant::now();
    let mut images = Vec::new();
    for &m in &moduli {
        let ring = ModRing::new(m);
        let xm = ring.embed(&Int::from(x));
        images.push(cheb_eval_elem(
            &ring,
            ChebKind::SecondKind,
            &Int::from(n),
            &xm,
        ));
    }
    let elapsed = started.elapsed();
    for (&m, u_n) in moduli.iter().zip(&images) {
        let ring = ModRing::new(m);
        let xm = ring.embed(&Int::from(x));
        let u_2nm1 = cheb_eval_elem(&ring, ChebKind::SecondKind, &Int::from(2 * n - 1), &xm);
        let t_n = cheb_eval_elem(&ring, ChebKind::FirstKind, &Int::from(n), &xm);
        let u_nm1 = cheb_eval_elem(&ring, ChebKind::SecondKind, &Int::from(n - 1), &xm);
        assert_eq!(
            u_2nm1,
            ring.mul(&ring.add(&t_n, &t_n), &u_nm1),
            "doubling identity failed mod {m} at n={n}, x={x}"
        );
        let u_np1 = cheb_eval_elem(&ring, ChebKind::SecondKind, &Int::from(n + 1), &xm);
        let two_x = ring.embed(&Int::from(2 * x));
        assert_eq!(u_np1, ring.sub(&ring.mul(&two_x, u_n), &u_nm1));
    }
    csv_row("eval_matrix_power", n, 0, x, elapsed.as_nanos());
    Ok(ExitCode::SUCCESS)
}

fn series_vs_closed(n: u64, d: i64, x: i64) -> Result<ExitCode> {
    let n = i64::try_from(n).map_err(|_| Error::Domain("n too large".into()))?;

    let started = Instant::now();
    let series = s_series(n, d)?;
    let series_time = started.elapsed();

    let started = Instant::now();
    let closed = s_closed(n, d)?;
    let closed_time = started.elapsed();

    assert_eq!(series, closed, "routes disagree at n={n}, d={d}");
    let at_x = rat(x, 1);
    let series_value = series.eval(&at_x)?;
    assert_eq!(series_value, s_eval(n, d, &at_x)?);

    csv_row("s_series", n as u64, d, x, series_time.as_nanos());
    csv_row("s_closed", n as u64, d, x, closed_time.as_nanos());
    Ok(ExitCode::SUCCESS)
}
