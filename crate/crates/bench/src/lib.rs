//! Shared helpers for the route benchmarks: reference implementations and
//! input builders, kept out of the benchmark files so both the benches and
//! their sanity tests can use them.

use chebfrac_core::{cheb_eval_big, ChebKind, Int, Rat};
use num_traits::{One, Zero};

/// U_n(x) by the plain three-term recurrence on exact integers; the
/// baseline the O(log n) evaluator is measured against.
pub fn u_by_recurrence(n: u64, x: i64) -> Int {
    let two_x = Int::from(2 * x);
    let mut prev = Int::zero(); // U_{-1}
    let mut cur = Int::one(); // U_0
    for _ in 0..n {
        let next = &two_x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// U_n(x) through the transfer-matrix evaluator.
pub fn u_by_matrix_power(n: u64, x: i64) -> Rat {
    cheb_eval_big(
        ChebKind::SecondKind,
        &Int::from(n),
        &Rat::from_integer(Int::from(x)),
    )
    .expect("nonnegative index")
}
