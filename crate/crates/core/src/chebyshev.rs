//! Chebyshev polynomials of both kinds: generation, fast evaluation at
//! rational points for very large indices, and closed-form coefficient
//! expansions through binomial coefficients.

use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binomial::gen_binomial;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{IntRing, Ring};
use crate::{Int, Rat};

/// Which of the two classical families.
///
/// `FirstKind` is T (T_0 = 1, T_1 = x), `SecondKind` is U (U_0 = 1,
/// U_1 = 2x); both satisfy p_{n+1} = 2x p_n - p_{n-1}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ChebKind {
    FirstKind,
    SecondKind,
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChebKind::FirstKind => write!(f, "T"),
            ChebKind::SecondKind => write!(f, "U"),
        }
    }
}

impl FromStr for ChebKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" | "first" => Ok(ChebKind::FirstKind),
            "U" | "u" | "second" => Ok(ChebKind::SecondKind),
            other => Err(Error::Domain(format!(
                "unknown Chebyshev kind '{other}', expected T or U"
            ))),
        }
    }
}

/// Default number of polynomials cached per kind.
pub const DEFAULT_MEMO_CAP: usize = 512;

struct Memo {
    t: Vec<Poly>,
    u: Vec<Poly>,
    cap: usize,
}

impl Memo {
    fn seeded() -> Self {
        Memo {
            t: vec![Poly::one(), Poly::x()],
            u: vec![Poly::one(), Poly::from_coeffs(&[0, 2])],
            cap: DEFAULT_MEMO_CAP,
        }
    }

    fn get(&mut self, kind: ChebKind, n: usize) -> Poly {
        // caches keep their two seed entries even under a tiny cap
        let cached_upto = n.min(self.cap.max(2) - 1);
        let cache = match kind {
            ChebKind::FirstKind => &mut self.t,
            ChebKind::SecondKind => &mut self.u,
        };
        while cache.len() <= cached_upto {
            let next = recurrence_step(&cache[cache.len() - 1], &cache[cache.len() - 2]);
            cache.push(next);
        }
        if n < cache.len() {
            return cache[n].clone();
        }
        let mut prev = cache[cache.len() - 2].clone();
        let mut cur = cache[cache.len() - 1].clone();
        for _ in cache.len()..=n {
            let next = recurrence_step(&cur, &prev);
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// `2x * cur - prev`.
fn recurrence_step(cur: &Poly, prev: &Poly) -> Poly {
    &cur.shift(1).scale(&Int::from(2)) - prev
}

fn memo() -> &'static Mutex<Memo> {
    static MEMO: OnceLock<Mutex<Memo>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(Memo::seeded()))
}

/// Change how many polynomials per kind stay cached. Shrinking drops the
/// tail immediately; indices beyond the cap are recomputed on demand.
pub fn set_memo_cap(cap: usize) {
    let mut memo = memo().lock().unwrap();
    memo.cap = cap;
    let keep = cap.max(2);
    memo.t.truncate(keep);
    memo.u.truncate(keep);
}

/// The degree-`n` Chebyshev polynomial of the requested kind, by the
/// three-term recurrence.
pub fn cheb(kind: ChebKind, n: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::NegativeIndex {
            what: "chebyshev index",
            value: n,
        });
    }
    Ok(memo().lock().unwrap().get(kind, n as usize))
}

/// Residual of the composition identity: `T_{nm} - T_n∘T_m`.
///
/// Contract: the zero polynomial for all `n, m >= 0`.
pub fn cheb_compose_check(n: i64, m: i64) -> Result<Poly> {
    if n < 0 || m < 0 {
        return Err(Error::NegativeIndex {
            what: "composition index",
            value: n.min(m),
        });
    }
    let lhs = cheb(ChebKind::FirstKind, n * m)?;
    let tn = cheb(ChebKind::FirstKind, n)?;
    let tm = cheb(ChebKind::FirstKind, m)?;
    Ok(&lhs - &tn.compose(&tm))
}

/// The same polynomial as [`cheb`], but assembled from the closed-form
/// binomial-coefficient expansion of the coefficients:
///
/// ```text
/// T_n = 1/2 · Σ_k (-1)^k ( C(n+1-k, k) - C(n-1-k, k-2) ) (2x)^(n-2k)
/// U_n =       Σ_k (-1)^k   C(n-k, k)                     (2x)^(n-2k)
/// ```
///
/// The sums use the extended conventions of [`gen_binomial`]; those are
/// exactly what make the T expansion reproduce T_0 and T_1.
pub fn cheb_coeffs_binomial(kind: ChebKind, n: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::NegativeIndex {
            what: "chebyshev index",
            value: n,
        });
    }
    let mut coeffs = vec![Int::zero(); n as usize + 1];
    for k in 0..=(n / 2) {
        let value = match kind {
            ChebKind::FirstKind => {
                let lead = gen_binomial(&Rat::from_integer(Int::from(n + 1 - k)), k);
                let tail = gen_binomial(&Rat::from_integer(Int::from(n - 1 - k)), k - 2);
                (lead - tail) / Rat::from_integer(Int::from(2))
            }
            ChebKind::SecondKind => gen_binomial(&Rat::from_integer(Int::from(n - k)), k),
        };
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let power = (n - 2 * k) as usize;
        let coeff = value * Rat::from_integer(Int::from(sign) << power);
        assert!(coeff.is_integer(), "expansion coefficient must be integral");
        coeffs[power] = coeff.to_integer();
    }
    Ok(Poly::new(coeffs))
}

/// Exact value of `T_n(x)` or `U_n(x)` in O(log n) ring operations.
///
/// Writes `x = p/q` and raises the homogenised transfer matrix
/// `[[2p, -q^2], [1, 0]]` to the n-th power by binary powering, which tracks
/// `q^n U_n(p/q)` as an integer; at `q = 1` this is the plain transfer matrix
/// `[[2x, -1], [1, 0]]`. Only one rational reduction happens, at the end.
pub fn cheb_eval_big(kind: ChebKind, n: &Int, x: &Rat) -> Result<Rat> {
    if n.is_negative() {
        return Err(Error::NegativeIndex {
            what: "chebyshev index",
            value: n.to_i64().unwrap_or(i64::MIN),
        });
    }
    let p = x.numer();
    let q = x.denom();
    let ring = IntRing;
    let a11 = p * 2;
    let a12 = -(q * q);
    let (v_n, v_prev) = transfer_pow(&ring, &a11, &a12, n);
    let value = match kind {
        ChebKind::SecondKind => v_n,
        // T_n = U_n - x U_{n-1}, homogenised: q^n T_n(p/q) = V_n - p V_{n-1}
        ChebKind::FirstKind => v_n - p * v_prev,
    };
    if q.is_one() {
        return Ok(Rat::from_integer(value));
    }
    let exp = n
        .to_u64()
        .expect("exact evaluation at a non-integer point needs an index below 2^64");
    Ok(Rat::new(value, num_traits::pow(q.clone(), exp as usize)))
}

/// [`cheb_eval_big`] at the image of an integer point inside an arbitrary
/// commutative ring. `x` must be the ring image of the evaluation point.
///
/// Panics if `n` is negative; callers validate signs at their boundary.
pub fn cheb_eval_elem<R: Ring>(ring: &R, kind: ChebKind, n: &Int, x: &R::Elem) -> R::Elem {
    assert!(!n.is_negative(), "chebyshev index must be nonnegative");
    let a11 = ring.add(x, x);
    let a12 = ring.sub(&ring.zero(), &ring.one());
    let (v_n, v_prev) = transfer_pow(ring, &a11, &a12, n);
    match kind {
        ChebKind::SecondKind => v_n,
        ChebKind::FirstKind => ring.sub(&v_n, &ring.mul(x, &v_prev)),
    }
}

/// Raise `A = [[a11, a12], [1, 0]]` to the n-th power; return
/// `((A^n)_11, (A^n)_21)`, i.e. the sequence values `(V_n, V_{n-1})` of
/// the recurrence `V_{k+1} = a11 V_k + a12 V_{k-1}`, `V_0 = 1`, `V_{-1} = 0`.
fn transfer_pow<R: Ring>(ring: &R, a11: &R::Elem, a12: &R::Elem, n: &Int) -> (R::Elem, R::Elem) {
    let zero = ring.zero();
    let one = ring.one();
    // matrices stored as [e11, e12, e21, e22]
    let mut result = [one.clone(), zero.clone(), zero.clone(), one.clone()];
    let mut base = [a11.clone(), a12.clone(), one, zero];
    let magnitude = n.magnitude();
    let bits = magnitude.bits();
    for i in 0..bits {
        if magnitude.bit(i) {
            result = mat_mul(ring, &result, &base);
        }
        if i + 1 < bits {
            base = mat_mul(ring, &base, &base);
        }
    }
    let [r11, _, r21, _] = result;
    (r11, r21)
}

fn mat_mul<R: Ring>(ring: &R, a: &[R::Elem; 4], b: &[R::Elem; 4]) -> [R::Elem; 4] {
    [
        ring.add(&ring.mul(&a[0], &b[0]), &ring.mul(&a[1], &b[2])),
        ring.add(&ring.mul(&a[0], &b[1]), &ring.mul(&a[1], &b[3])),
        ring.add(&ring.mul(&a[2], &b[0]), &ring.mul(&a[3], &b[2])),
        ring.add(&ring.mul(&a[2], &b[1]), &ring.mul(&a[3], &b[3])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::ring::ModRing;

    /// Independent recurrence on values, not polynomials.
    fn value_oracle(kind: ChebKind, n: u32, x: &Rat) -> Rat {
        let mut prev = Rat::one();
        let mut cur = match kind {
            ChebKind::FirstKind => x.clone(),
            ChebKind::SecondKind => x + x,
        };
        if n == 0 {
            return prev;
        }
        for _ in 1..n {
            let next = rat(2, 1) * x * &cur - &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    #[test]
    fn base_cases() {
        assert_eq!(cheb(ChebKind::FirstKind, 0).unwrap(), Poly::one());
        assert_eq!(cheb(ChebKind::FirstKind, 1).unwrap(), Poly::x());
        assert_eq!(cheb(ChebKind::SecondKind, 0).unwrap(), Poly::one());
        assert_eq!(
            cheb(ChebKind::SecondKind, 1).unwrap(),
            Poly::from_coeffs(&[0, 2])
        );
    }

    #[test]
    fn recurrence_values() {
        assert_eq!(
            cheb(ChebKind::SecondKind, 2).unwrap(),
            Poly::from_coeffs(&[-1, 0, 4])
        );
        assert_eq!(
            cheb(ChebKind::FirstKind, 3).unwrap(),
            Poly::from_coeffs(&[0, -3, 0, 4])
        );
        assert_eq!(
            cheb(ChebKind::SecondKind, 4).unwrap(),
            Poly::from_coeffs(&[1, 0, -12, 0, 16])
        );
    }

    #[test]
    fn negative_index_rejected() {
        assert!(matches!(
            cheb(ChebKind::FirstKind, -1),
            Err(Error::NegativeIndex { .. })
        ));
        assert!(matches!(
            cheb_compose_check(-2, 3),
            Err(Error::NegativeIndex { .. })
        ));
        assert!(matches!(
            cheb_eval_big(ChebKind::SecondKind, &Int::from(-5), &rat(2, 1)),
            Err(Error::NegativeIndex { .. })
        ));
    }

    #[test]
    fn composition_identity() {
        for (n, m) in [(2, 3), (1, 7), (4, 4), (0, 5), (3, 2)] {
            assert!(
                cheb_compose_check(n, m).unwrap().is_zero(),
                "T_{{{n}*{m}}} != T_{n}∘T_{m}"
            );
        }
    }

    #[test]
    fn eval_big_matches_value_oracle() {
        // oracle values at x = 2: U: 1, 4, 15, 56; T: 1, 2, 7, 26, 97, 362
        assert_eq!(
            cheb_eval_big(ChebKind::SecondKind, &Int::from(3), &rat(2, 1)).unwrap(),
            rat(56, 1)
        );
        assert_eq!(
            cheb_eval_big(ChebKind::FirstKind, &Int::from(5), &rat(2, 1)).unwrap(),
            rat(362, 1)
        );
        assert_eq!(
            cheb_eval_big(ChebKind::SecondKind, &Int::from(0), &rat(-7, 3)).unwrap(),
            Rat::one()
        );
        for kind in [ChebKind::FirstKind, ChebKind::SecondKind] {
            for n in [0u32, 1, 2, 7, 20, 63] {
                for x in [rat(2, 1), rat(-3, 1), rat(5, 2), rat(-7, 3)] {
                    assert_eq!(
                        cheb_eval_big(kind, &Int::from(n), &x).unwrap(),
                        value_oracle(kind, n, &x),
                        "{kind}_{n}({x})"
                    );
                }
            }
        }
    }

    #[test]
    fn eval_big_matches_polynomial_evaluation() {
        // 20 deterministic pseudo-random rationals, n up to 200
        let mut state = 0x243f6a8885a308d3u64;
        let mut points = Vec::new();
        while points.len() < 20 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let num = (state >> 33) as i64 % 40 - 20;
            let den = (state >> 17) as i64 % 9 + 1;
            let x = rat(num, den);
            if !points.contains(&x) {
                points.push(x);
            }
        }
        for kind in [ChebKind::FirstKind, ChebKind::SecondKind] {
            for n in [0i64, 1, 2, 5, 17, 64, 128, 199, 200] {
                let p = cheb(kind, n).unwrap();
                for x in &points {
                    assert_eq!(
                        cheb_eval_big(kind, &Int::from(n), x).unwrap(),
                        p.eval(x),
                        "{kind}_{n}({x})"
                    );
                }
            }
        }
    }

    #[test]
    fn eval_big_satisfies_recurrence_at_large_index() {
        let x = rat(7, 3);
        let n = Int::from(20_000);
        let u_prev = cheb_eval_big(ChebKind::SecondKind, &(&n - 1), &x).unwrap();
        let u_n = cheb_eval_big(ChebKind::SecondKind, &n, &x).unwrap();
        let u_next = cheb_eval_big(ChebKind::SecondKind, &(&n + 1), &x).unwrap();
        assert_eq!(u_next, rat(2, 1) * &x * &u_n - &u_prev);
    }

    #[test]
    fn eval_elem_mod_matches_exact_residue() {
        let ring = ModRing::new(1_000_000_007);
        for n in [0u64, 1, 2, 3, 10, 97] {
            let exact = cheb_eval_big(ChebKind::SecondKind, &Int::from(n), &rat(3, 1)).unwrap();
            let image = ring.embed(&exact.to_integer());
            let x = ring.embed(&Int::from(3));
            assert_eq!(
                cheb_eval_elem(&ring, ChebKind::SecondKind, &Int::from(n), &x),
                image
            );
        }
    }

    #[test]
    fn binomial_expansion_examples() {
        assert_eq!(
            cheb_coeffs_binomial(ChebKind::FirstKind, 0).unwrap(),
            Poly::one()
        );
        assert_eq!(
            cheb_coeffs_binomial(ChebKind::FirstKind, 1).unwrap(),
            Poly::x()
        );
        assert_eq!(
            cheb_coeffs_binomial(ChebKind::SecondKind, 4).unwrap(),
            Poly::from_coeffs(&[1, 0, -12, 0, 16])
        );
    }

    #[test]
    fn binomial_expansion_matches_recurrence() {
        for kind in [ChebKind::FirstKind, ChebKind::SecondKind] {
            for n in 0..=60 {
                assert_eq!(
                    cheb_coeffs_binomial(kind, n).unwrap(),
                    cheb(kind, n).unwrap(),
                    "{kind}_{n}"
                );
            }
        }
    }

    #[test]
    fn pell_instance_as_polynomials() {
        // T_n^2 - (x^2 - 1) U_{n-1}^2 = 1
        let x2m1 = Poly::from_coeffs(&[-1, 0, 1]);
        for n in 1..=60 {
            let t = cheb(ChebKind::FirstKind, n).unwrap();
            let u = cheb(ChebKind::SecondKind, n - 1).unwrap();
            let lhs = &(&t * &t) - &(&x2m1 * &(&u * &u));
            assert_eq!(lhs, Poly::one(), "n = {n}");
        }
    }

    #[test]
    fn memo_cap_does_not_change_results() {
        set_memo_cap(4);
        let a = cheb(ChebKind::SecondKind, 20).unwrap();
        set_memo_cap(DEFAULT_MEMO_CAP);
        let b = cheb(ChebKind::SecondKind, 20).unwrap();
        assert_eq!(a, b);
    }
}
