//! Generalized binomial coefficients with rational upper argument.

use num_traits::{One, Signed, Zero};

use crate::{Int, Rat};

/// Binomial coefficient `C(a, k)` for rational `a` and signed integer `k`.
///
/// For `k >= 0` this is the falling factorial `a(a-1)...(a-k+1) / k!`.
/// Negative lower indices follow the conventions that make the closed-form
/// Chebyshev coefficient expansions correct down to degree zero:
/// `C(-1, -1) = 1`, `C(-1, -2) = -1`, and every other negative-`k` value
/// is zero.
pub fn gen_binomial(a: &Rat, k: i64) -> Rat {
    match k {
        _ if k >= 0 => {
            let mut num = Rat::one();
            for t in 0..k {
                num *= a - Rat::from_integer(Int::from(t));
            }
            num / Rat::from_integer(factorial(k as u64))
        }
        -1 => {
            if is_minus_one(a) {
                Rat::one()
            } else {
                Rat::zero()
            }
        }
        -2 => {
            if is_minus_one(a) {
                -Rat::one()
            } else {
                Rat::zero()
            }
        }
        _ => Rat::zero(),
    }
}

fn is_minus_one(a: &Rat) -> bool {
    a.is_integer() && a.numer().magnitude().is_one() && a.is_negative()
}

/// Ordinary integer binomial `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for t in 0..k {
        acc = acc * Int::from(n - t) / Int::from(t + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for t in 2..=n {
        acc *= Int::from(t);
    }
    acc
}
