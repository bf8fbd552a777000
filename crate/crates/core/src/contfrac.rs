//! Finite continued fractions and the integer-only periodic expansion of
//! the quadratic surd `x - sqrt(x^2 - 1)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::chebyshev::{cheb_eval_big, ChebKind};
use crate::error::{Error, Result};
use crate::{Int, Rat};

/// A finite simple continued fraction `[a0; a1, a2, ...]`.
///
/// The leading quotient may be any integer; every later quotient is at
/// least 1. Construction enforces the invariant, so evaluation never fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CFrac {
    quotients: Vec<Int>,
}

impl CFrac {
    pub fn new(quotients: Vec<Int>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::MalformedCf("no partial quotients".into()));
        }
        for (k, a) in quotients.iter().enumerate().skip(1) {
            if a < &Int::one() {
                return Err(Error::MalformedCf(format!(
                    "partial quotient a{k} = {a} must be >= 1"
                )));
            }
        }
        Ok(CFrac { quotients })
    }

    pub fn from_i64(quotients: &[i64]) -> Result<Self> {
        CFrac::new(quotients.iter().map(|&a| Int::from(a)).collect())
    }

    pub fn quotients(&self) -> &[Int] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Exact value via the convergent recurrence
    /// `p_k = a_k p_{k-1} + p_{k-2}`, `q_k = a_k q_{k-1} + q_{k-2}`.
    pub fn eval(&self) -> Rat {
        let (p, q) = self.convergent_pairs().pop().unwrap();
        Rat::new(p, q)
    }

    /// All convergents `p_k / q_k` in lowest terms, in order.
    pub fn convergents(&self) -> Vec<Rat> {
        self.convergent_pairs()
            .into_iter()
            .map(|(p, q)| Rat::new(p, q))
            .collect()
    }

    fn convergent_pairs(&self) -> Vec<(Int, Int)> {
        let mut out = Vec::with_capacity(self.quotients.len());
        let (mut p_prev, mut q_prev) = (Int::one(), Int::zero());
        let (mut p, mut q) = (self.quotients[0].clone(), Int::one());
        out.push((p.clone(), q.clone()));
        for a in &self.quotients[1..] {
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = p;
            q_prev = q;
            p = p_next;
            q = q_next;
            out.push((p.clone(), q.clone()));
        }
        out
    }
}

impl fmt::Display for CFrac {
    /// The exact text form `[a0;a1,a2,...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (k, a) in self.quotients.iter().enumerate().skip(1) {
            write!(f, "{}{a}", if k == 1 { ";" } else { "," })?;
        }
        write!(f, "]")
    }
}

impl FromStr for CFrac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::MalformedCf(format!("expected [a0;a1,...], got '{s}'")))?;
        let (head, tail) = match body.split_once(';') {
            Some((h, t)) => (h, Some(t)),
            None => (body, None),
        };
        let parse = |tok: &str| -> Result<Int> {
            tok.trim()
                .parse::<Int>()
                .map_err(|_| Error::MalformedCf(format!("bad partial quotient '{tok}'")))
        };
        let mut quotients = vec![parse(head)?];
        if let Some(tail) = tail {
            for tok in tail.split(',') {
                quotients.push(parse(tok)?);
            }
        }
        CFrac::new(quotients)
    }
}

/// Exact value of a continued fraction (free-function form of
/// [`CFrac::eval`]).
pub fn cf_eval(cf: &CFrac) -> Rat {
    cf.eval()
}

/// Free-function form of [`CFrac::convergents`].
pub fn convergents(cf: &CFrac) -> Vec<Rat> {
    cf.convergents()
}

/// The structured expansion `[0; 2x-1, 1, (2(x-1), 1)^n]`, whose value is
/// `U_n(x) / U_{n+1}(x)` for integer `x >= 2`.
pub fn u_ratio_expansion(n: i64, x: i64) -> Result<CFrac> {
    if n < 0 {
        return Err(Error::NegativeIndex {
            what: "repetition count n",
            value: n,
        });
    }
    if x < 2 {
        return Err(Error::Domain(format!(
            "expansion requires x >= 2 so all quotients are positive, got x = {x}"
        )));
    }
    let mut quotients = Vec::with_capacity(3 + 2 * n as usize);
    quotients.push(Int::zero());
    quotients.push(Int::from(2 * x - 1));
    quotients.push(Int::one());
    for _ in 0..n {
        quotients.push(Int::from(2 * (x - 1)));
        quotients.push(Int::one());
    }
    CFrac::new(quotients)
}

/// State of the integer expansion of `(P + sqrt(D)) / Q`.
///
/// Invariant maintained by the expansion loop: `Q != 0` and `Q` divides
/// `D - P^2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SurdState {
    pub d: Int,
    pub p: Int,
    pub q: Int,
}

/// Where a repeating block of partial quotients starts and how long it is
/// (indices count quotients, including the leading `a0`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Period {
    pub start: usize,
    pub len: usize,
}

/// A prefix of the expansion of `x - sqrt(x^2 - 1)` together with the
/// period detected by a state revisit (if the prefix was long enough).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurdExpansion {
    pub cf: CFrac,
    pub period: Option<Period>,
}

/// First `count` partial quotients of `x - sqrt(x^2 - 1)` for integer
/// `x >= 2`, computed purely on integers.
///
/// The number lies in (0, 1), so `a0 = 0` is emitted directly and the loop
/// expands the reciprocal `x + sqrt(x^2 - 1)` with the classical update
/// `a = floor((P + floor(sqrt(D))) / Q)`, `P' = aQ - P`, `Q' = (D - P'^2)/Q`.
/// The period is detected when a `(P, Q)` state is revisited, not by
/// pattern-matching the output.
pub fn surd_expand_detailed(x: i64, count: i64) -> Result<SurdExpansion> {
    if x < 2 {
        return Err(Error::Domain(format!(
            "surd expansion requires an integer x >= 2, got x = {x}"
        )));
    }
    if count < 1 {
        return Err(Error::Domain(format!(
            "quotient count must be >= 1, got {count}"
        )));
    }
    let count = count as usize;
    let big_x = Int::from(x);
    let d: Int = &big_x * &big_x - 1;
    let sqrt_d = d.sqrt(); // floor, and exact sqrt is impossible for x >= 2
    debug_assert!(&sqrt_d * &sqrt_d < d);

    let mut quotients = vec![Int::zero()];
    let mut state = SurdState {
        d: d.clone(),
        p: big_x,
        q: Int::one(),
    };
    let mut seen: HashMap<(Int, Int), usize> = HashMap::new();
    let mut period = None;
    while quotients.len() < count {
        let idx = quotients.len();
        let key = (state.p.clone(), state.q.clone());
        if let Some(&first) = seen.get(&key) {
            if period.is_none() {
                period = Some(Period {
                    start: first,
                    len: idx - first,
                });
            }
        } else {
            seen.insert(key, idx);
        }
        let a = (&state.p + &sqrt_d).div_floor(&state.q);
        quotients.push(a.clone());
        let p_next = &a * &state.q - &state.p;
        debug_assert!((&state.d - &p_next * &p_next).mod_floor(&state.q).is_zero());
        let q_next = (&state.d - &p_next * &p_next) / &state.q;
        state.p = p_next;
        state.q = q_next;
    }
    Ok(SurdExpansion {
        cf: CFrac::new(quotients)?,
        period,
    })
}

/// [`surd_expand_detailed`] without the period report.
pub fn surd_expand(x: i64, count: i64) -> Result<CFrac> {
    surd_expand_detailed(x, count).map(|e| e.cf)
}

/// `U_n(x) / U_{n+1}(x)` evaluated exactly; the reference value for the
/// structured expansion.
pub fn u_ratio(n: i64, x: i64) -> Result<Rat> {
    let num = cheb_eval_big(
        ChebKind::SecondKind,
        &Int::from(n),
        &Rat::from_integer(x.into()),
    )?;
    let den = cheb_eval_big(
        ChebKind::SecondKind,
        &Int::from(n + 1),
        &Rat::from_integer(x.into()),
    )?;
    if den.is_zero() {
        return Err(Error::Pole);
    }
    Ok(num / den)
}
