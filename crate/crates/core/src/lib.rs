//! Exact arithmetic for iterated-Chebyshev convergents of quadratic surds.
//!
//! Everything here is integer or rational arithmetic with arbitrary
//! precision; there is no floating point anywhere. The crate provides:
//!
//! - dense integer/rational polynomials and reduced rational functions
//!   ([`poly`], [`ratfunc`]);
//! - Chebyshev polynomials of both kinds with O(log n) evaluation at
//!   rational points ([`chebyshev`]);
//! - exact residual checks for a family of Vajda-style identities
//!   ([`identities`]);
//! - the iterated sum-product approximants `S_{n,d}` of the small root of
//!   `X^2 - 2xX + 1`, with exact error certificates ([`surd`]);
//! - finite continued fractions and the integer-only periodic expansion of
//!   `x - sqrt(x^2 - 1)` ([`contfrac`]);
//! - a generalized-binomial sum that is constant in one of its arguments,
//!   the Pascal-like triangle it generates, an exact LU factorisation, and
//!   the triangle's derived integer sequences ([`triangle`]).

pub mod binomial;
pub mod chebyshev;
pub mod contfrac;
pub mod error;
pub mod identities;
pub mod poly;
pub mod ratfunc;
pub mod ring;
pub mod surd;
pub mod triangle;

/// Signed arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Exact rational number (always kept reduced, positive denominator).
pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub use binomial::{binomial, factorial, gen_binomial};
pub use chebyshev::{
    cheb, cheb_coeffs_binomial, cheb_compose_check, cheb_eval_big, cheb_eval_elem, set_memo_cap,
    ChebKind, DEFAULT_MEMO_CAP,
};
pub use contfrac::{
    cf_eval, convergents, surd_expand, surd_expand_detailed, u_ratio_expansion, CFrac, Period,
    SurdExpansion, SurdState,
};
pub use error::{Error, Result};
pub use identities::{
    identity_residual, identity_sweep, params, Counterexample, IdentityTag, Params, SweepReport,
    ALL_TAGS,
};
pub use poly::{Poly, QPoly};
pub use ratfunc::RatFunc;
pub use ring::{CountingRing, IntRing, ModRing, Ring};
pub use surd::{
    gap_certificate, quadratic_residual_sides, s_closed, s_eval, s_recursive, s_series,
    SYMBOLIC_GUARD,
};
pub use triangle::{
    binom_l_identity, f_eval, f_identity_residuals, l_via_f, lu_check, matrix_m,
    power_identity_residual, q_poly, sequences, triangle, FParams, LuReport, SeqName, SqMatrix,
    TriArray,
};
