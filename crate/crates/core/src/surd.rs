//! The iterated sum-product approximants `S_{n,d}` of the root of
//! `X^2 - 2xX + 1` closest to zero, built by three independent routes,
//! with an exact residual identity and exact error certificates.
//!
//! For `n >= 0`, `d >= 1` the approximant is
//!
//! ```text
//! S_{n,d} = Σ_{k=0}^n  U_{d-1}∘T_{(d+1)^k} · Π_{j=0}^k 1/(U_d∘T_{(d+1)^j})
//! ```
//!
//! It also satisfies the recursion `S_{n+1,d} = (U_{d-1} + S_{n,d}∘T_{d+1})/U_d`
//! and collapses to the single fraction `U_{N-2}/U_{N-1}` with
//! `N = (d+1)^{n+1}`. All three constructions are exposed; equality of their
//! canonical forms is one of the strongest cross-checks in the test suite.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::chebyshev::{cheb, cheb_eval_big, ChebKind};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::{Int, Rat};

/// Symbolic routes refuse indices with `(d+1)^{n+1}` beyond this bound;
/// the degree of the reduced denominator is `(d+1)^{n+1} - 1` and memory
/// grows quadratically with it during verification.
pub const SYMBOLIC_GUARD: u128 = 1 << 14;

/// Validate `(n, d)` and return `(d+1)^{n+1}` for the symbolic routes.
fn guarded_exponent(n: i64, d: i64) -> Result<i64> {
    let raw = raw_exponent(n, d)?;
    match raw.to_u128() {
        Some(v) if v <= SYMBOLIC_GUARD => Ok(v as i64),
        _ => Err(Error::DegreeOverflow {
            requested: raw.to_u128().unwrap_or(u128::MAX),
            limit: SYMBOLIC_GUARD,
        }),
    }
}

/// Validate `(n, d)` and return `(d+1)^{n+1}` without any size guard.
fn raw_exponent(n: i64, d: i64) -> Result<Int> {
    if n < 0 {
        return Err(Error::NegativeIndex {
            what: "approximant depth n",
            value: n,
        });
    }
    if d < 1 {
        return Err(Error::Domain(format!(
            "approximant order d must be >= 1, got {d}"
        )));
    }
    let exp = u32::try_from(n + 1)
        .map_err(|_| Error::Domain(format!("approximant depth n = {n} is too large")))?;
    Ok(num_traits::pow(Int::from(d + 1), exp as usize))
}

/// `S_{n,d}` assembled term by term from the defining sum of products.
pub fn s_series(n: i64, d: i64) -> Result<RatFunc> {
    guarded_exponent(n, d)?;
    let u_top = cheb(ChebKind::SecondKind, d - 1)?;
    let u_bot = cheb(ChebKind::SecondKind, d)?;

    // iterate T_{(d+1)^k} by composing with T_{d+1}
    let t_step = cheb(ChebKind::FirstKind, d + 1)?;
    let mut t_power = Poly::x(); // T_{(d+1)^0} = T_1
    let mut numerators = Vec::new(); // A_k = U_{d-1}∘T_{(d+1)^k}
    let mut denominators = Vec::new(); // B_k = U_d∘T_{(d+1)^k}
    for k in 0..=n {
        numerators.push(u_top.compose(&t_power));
        denominators.push(u_bot.compose(&t_power));
        if k < n {
            t_power = t_power.compose(&t_step);
        }
    }

    // common denominator Π B_j; numerator Σ_k A_k Π_{j>k} B_j
    let mut suffix = vec![Poly::one()];
    for b in denominators.iter().rev() {
        let next = &suffix[suffix.len() - 1] * b;
        suffix.push(next);
    }
    suffix.reverse(); // suffix[k] = Π_{j >= k} B_j
    let mut num = Poly::zero();
    for (k, a) in numerators.iter().enumerate() {
        num = &num + &(a * &suffix[k + 1]);
    }
    RatFunc::new(num, suffix[0].clone())
}

/// `S_{n,d}` by iterating `S_{k+1} = (U_{d-1} + S_k∘T_{d+1}) / U_d` from the
/// base case `S_{0,d} = U_{d-1}/U_d`.
pub fn s_recursive(n: i64, d: i64) -> Result<RatFunc> {
    guarded_exponent(n, d)?;
    let u_top = cheb(ChebKind::SecondKind, d - 1)?;
    let u_bot = cheb(ChebKind::SecondKind, d)?;
    let t_step = cheb(ChebKind::FirstKind, d + 1)?;
    let mut s = RatFunc::new(u_top.clone(), u_bot.clone())?;
    for _ in 0..n {
        let composed = s.compose_poly(&t_step)?;
        let num = &(&u_top * composed.den()) + composed.num();
        let den = &u_bot * composed.den();
        s = RatFunc::new(num, den)?;
    }
    Ok(s)
}

/// `S_{n,d}` as the single fraction `U_{N-2}/U_{N-1}`, `N = (d+1)^{n+1}`.
pub fn s_closed(n: i64, d: i64) -> Result<RatFunc> {
    let big_n = guarded_exponent(n, d)?;
    RatFunc::new(
        cheb(ChebKind::SecondKind, big_n - 2)?,
        cheb(ChebKind::SecondKind, big_n - 1)?,
    )
}

/// Exact value of `S_{n,d}(x)`; indices are unguarded because the closed
/// form needs only two O(log N) evaluations.
pub fn s_eval(n: i64, d: i64, x: &Rat) -> Result<Rat> {
    let big_n = raw_exponent(n, d)?;
    let den = cheb_eval_big(ChebKind::SecondKind, &(&big_n - 1), x)?;
    if den.is_zero() {
        return Err(Error::Pole);
    }
    let num = cheb_eval_big(ChebKind::SecondKind, &(&big_n - 2), x)?;
    Ok(num / den)
}

/// Both sides of `S^2 - 2xS + 1 = (Π_{j=0}^n 1/(U_d∘T_{(d+1)^j}))^2`,
/// cleared of denominators.
///
/// Writing `S = P/Q` reduced and `W = Π_j U_d∘T_{(d+1)^j}`, the identity is
/// equivalent to the polynomial equality
///
/// ```text
/// (P^2 - 2x·P·Q + Q^2) · W^2  =  Q^2
/// ```
///
/// and exactly those two polynomials are returned, left first. Returning
/// both sides rather than their difference lets a failing caller report
/// magnitudes.
pub fn quadratic_residual_sides(n: i64, d: i64) -> Result<(Poly, Poly)> {
    guarded_exponent(n, d)?;
    let s = s_series(n, d)?;
    let p = s.num();
    let q = s.den();

    let u_bot = cheb(ChebKind::SecondKind, d)?;
    let t_step = cheb(ChebKind::FirstKind, d + 1)?;
    let mut t_power = Poly::x();
    let mut product = Poly::one();
    for k in 0..=n {
        product = &product * &u_bot.compose(&t_power);
        if k < n {
            t_power = t_power.compose(&t_step);
        }
    }

    let two_x = Poly::from_coeffs(&[0, 2]);
    let quadratic = &(&(p * p) - &(&two_x * &(p * q))) + &(q * q);
    let lhs = &quadratic * &(&product * &product);
    let rhs = q * q;
    Ok((lhs, rhs))
}

/// The exact positive gap `g = S_{n,d}(x)^2 - 2x·S_{n,d}(x) + 1`, computed
/// from its product form `1 / (Π_{j=0}^n U_d(T_{(d+1)^j}(x)))^2`.
///
/// Shrinks strictly when either `n` or `d` grows, which certifies the
/// convergence of the approximants without ever leaving the rationals.
pub fn gap_certificate(n: i64, d: i64, x: &Rat) -> Result<Rat> {
    raw_exponent(n, d)?; // validates n, d
    if x.abs() <= Rat::one() {
        return Err(Error::Domain(format!(
            "gap certificate requires |x| > 1, got x = {x}"
        )));
    }
    let mut product = Rat::one();
    let mut index = Int::one(); // (d+1)^j
    for _ in 0..=n {
        let t_val = cheb_eval_big(ChebKind::FirstKind, &index, x)?;
        let u_val = cheb_eval_big(ChebKind::SecondKind, &Int::from(d), &t_val)?;
        product *= u_val;
        index *= Int::from(d + 1);
    }
    Ok(Rat::one() / (&product * &product))
}
