//! The generalized-binomial sum `f(a,d,n)_x`, the Pascal-like triangle it
//! generates, an exact LU factorisation of the associated matrices, and the
//! integer sequences read off the triangle.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::binomial::{binomial, gen_binomial};
use crate::error::{Error, Result};
use crate::poly::{Poly, QPoly};
use crate::{rat, Int, Rat};

/// Arguments of the sum `f(a,d,n)_x = Σ_{k=0}^{d-n} C(a+d+x-k, k) C(d+k-x, d-n-k)`.
///
/// `a`, `d` and the evaluation point `x` may be arbitrary rationals; only
/// the summation length `m = d - n` must be a nonnegative integer, so `m`
/// is stored instead of `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FParams {
    pub a: Rat,
    pub d: Rat,
    pub m: u32,
    pub x: Rat,
}

impl FParams {
    pub fn new(a: Rat, d: Rat, m: u32, x: Rat) -> Self {
        FParams { a, d, m, x }
    }
}

/// The sum itself. Constant in `x` — that is the theorem the test suite
/// hammers on — but evaluated at the `x` the caller provides.
pub fn f_eval(p: &FParams) -> Rat {
    let mut acc = Rat::zero();
    for k in 0..=p.m {
        let upper_left = &p.a + &p.d + &p.x - Rat::from_integer(Int::from(k));
        let upper_right = &p.d + Rat::from_integer(Int::from(k)) - &p.x;
        acc += gen_binomial(&upper_left, k as i64) * gen_binomial(&upper_right, (p.m - k) as i64);
    }
    acc
}

/// Residuals of the three recurrence identities of the sum, all zero in
/// the domain:
///
/// 1. `f(a,d,n)_x = f(a-2c, d+c, n+c)_{x+c}` with `c = a/2`;
/// 2. `f(a,d,n)_x = f(a-1,d,n)_x + f(a-1,d,n+1)_{x-1}`;
/// 3. `f(a,d,n)_x = f(a-1,d,n)_{x+1} + f(a-1,d,n+1)_{x+1}`.
///
/// Identities 2 and 3 shorten the sum, so they need `m >= 1`.
pub fn f_identity_residuals(p: &FParams) -> Result<(Rat, Rat, Rat)> {
    if p.m == 0 {
        return Err(Error::Domain(
            "shift identities need m >= 1 (the sum must be shortenable)".into(),
        ));
    }
    let base = f_eval(p);
    let c = &p.a / rat(2, 1);
    let shifted = FParams {
        a: &p.a - rat(2, 1) * &c,
        d: &p.d + &c,
        m: p.m,
        x: &p.x + &c,
    };
    let r_half = &base - &f_eval(&shifted);

    let one_less = |m: u32, x: Rat| FParams {
        a: &p.a - Rat::one(),
        d: p.d.clone(),
        m,
        x,
    };
    let r_down = &base
        - &f_eval(&one_less(p.m, p.x.clone()))
        - &f_eval(&one_less(p.m - 1, &p.x - Rat::one()));
    let r_up = &base
        - &f_eval(&one_less(p.m, &p.x + Rat::one()))
        - &f_eval(&one_less(p.m - 1, &p.x + Rat::one()));
    Ok((r_half, r_down, r_up))
}

/// The Pascal-like triangle: interior entries follow Pascal's recurrence
/// but the left edge alternates sign.
///
/// `l_{i,0} = (-1)^i`, `l_{i,i} = 1`, `l_{i,j} = l_{i-1,j-1} + l_{i-1,j}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriArray {
    rows: Vec<Vec<Int>>,
}

impl TriArray {
    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Entry `l_{i,j}`, reading indices outside `0 <= j <= i` as zero.
    pub fn entry(&self, i: i64, j: i64) -> Int {
        if i < 0 || j < 0 || j > i {
            return Int::zero();
        }
        match self.rows.get(i as usize) {
            Some(row) => row[j as usize].clone(),
            None => panic!(
                "row {i} not generated (triangle has {} rows)",
                self.rows.len()
            ),
        }
    }
}

/// Generate the first `rows` rows of the triangle.
pub fn triangle(rows: usize) -> TriArray {
    let mut out: Vec<Vec<Int>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let value = if j == 0 {
                if i % 2 == 0 {
                    Int::one()
                } else {
                    -Int::one()
                }
            } else if j == i {
                Int::one()
            } else {
                &out[i - 1][j - 1] + &out[i - 1][j]
            };
            row.push(value);
        }
        out.push(row);
    }
    TriArray { rows: out }
}

/// Triangle entry through the sum: `l_{i,j} = f(0, (i-1)/2, j - (i+1)/2)_x`
/// for any `x`. Equal to the recurrence-built entry for every `x`; the
/// argument is exposed precisely so tests can vary it.
pub fn l_via_f(i: i64, j: i64, x: &Rat) -> Result<Rat> {
    if i < 0 || j < 0 || j > i {
        return Err(Error::Domain(format!(
            "triangle indices need 0 <= j <= i, got i = {i}, j = {j}"
        )));
    }
    let p = FParams {
        a: Rat::zero(),
        d: rat(i - 1, 2),
        m: (i - j) as u32,
        x: x.clone(),
    };
    Ok(f_eval(&p))
}

/// The degree-`N` polynomial `Q_N` with `Q_N(z) = f(0, z/2, z/2 - N)`,
/// recovered by Lagrange interpolation of the sum at `z = 0, 1, ..., N`
/// (evaluation point `x = 0`; any `x` gives the same values).
pub fn q_poly(n: u32) -> QPoly {
    let nodes: Vec<(Rat, Rat)> = (0..=n as i64)
        .map(|z| {
            let p = FParams {
                a: Rat::zero(),
                d: rat(z, 2),
                m: n,
                x: Rat::zero(),
            };
            (rat(z, 1), f_eval(&p))
        })
        .collect();
    QPoly::interpolate(&nodes)
}

/// Residual of `C(n,k) = l_{n,k} + 2 l_{n,k+1}`; triangle entries beyond
/// the row read as zero, which covers the diagonal and out-of-row cases.
pub fn binom_l_identity(n: u32, k: u32) -> Rat {
    let tri = triangle(n as usize + 1);
    let direct = binomial(n as u64, k as u64);
    let combined = tri.entry(n as i64, k as i64) + tri.entry(n as i64, k as i64 + 1) * Int::from(2);
    Rat::from_integer(direct - combined)
}

/// Residual of `x^n = (-1)^n + (x+1) Σ_{k=1}^n l_{n,k} (x-1)^{k-1}` as a
/// polynomial; contract: zero for every `n`.
pub fn power_identity_residual(n: u32) -> Poly {
    let tri = triangle(n as usize + 1);
    let x_minus_1 = Poly::from_coeffs(&[-1, 1]);
    let mut sum = Poly::zero();
    let mut power = Poly::one(); // (x-1)^{k-1}
    for k in 1..=n as i64 {
        sum = &sum + &power.scale(&tri.entry(n as i64, k));
        power = &power * &x_minus_1;
    }
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let rhs = &Poly::from_coeffs(&[sign]) + &(&Poly::from_coeffs(&[1, 1]) * &sum);
    &Poly::monomial(Int::one(), n as usize) - &rhs
}

/// Dense square integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SqMatrix {
    size: usize,
    entries: Vec<Int>,
}

impl SqMatrix {
    fn zeroed(size: usize) -> Self {
        SqMatrix {
            size,
            entries: vec![Int::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Int) {
        self.entries[i * self.size + j] = v;
    }

    pub fn mul(&self, rhs: &SqMatrix) -> SqMatrix {
        assert_eq!(self.size, rhs.size);
        let mut out = SqMatrix::zeroed(self.size);
        for i in 0..self.size {
            for k in 0..self.size {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.size {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for SqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            for j in 0..self.size {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The matrix `M(α)` built from a seed column: `M_{0,j} = 1`,
/// `M_{i,0} = α_i`, `M_{i,j} = M_{i-1,j} + M_{i,j-1}`.
///
/// The recursive fill is cross-checked against the closed form
/// `M_{i,j} = Σ_k C(k+j-1, k) α_{i-k}` for `j > 0` before returning.
pub fn matrix_m(alpha: &[Int], size: usize) -> Result<SqMatrix> {
    if size < 1 {
        return Err(Error::Domain("matrix size must be >= 1".into()));
    }
    if alpha.len() < size {
        return Err(Error::Domain(format!(
            "need {size} seed values, got {}",
            alpha.len()
        )));
    }
    if !alpha[0].is_one() {
        return Err(Error::Domain(format!(
            "seed must start with 1, got {}",
            alpha[0]
        )));
    }
    let mut m = SqMatrix::zeroed(size);
    for j in 0..size {
        m.set(0, j, Int::one());
    }
    for (i, a) in alpha.iter().enumerate().take(size).skip(1) {
        m.set(i, 0, a.clone());
    }
    for i in 1..size {
        for j in 1..size {
            let v = m.get(i - 1, j) + m.get(i, j - 1);
            m.set(i, j, v);
        }
    }
    for i in 0..size {
        for j in 1..size {
            let mut closed = Int::zero();
            for k in 0..=i {
                closed += binomial((k + j - 1) as u64, k as u64) * &alpha[i - k];
            }
            assert_eq!(
                m.get(i, j),
                &closed,
                "recursive fill disagrees with the closed form at ({i},{j})"
            );
        }
    }
    Ok(m)
}

/// Outcome of the factorisation check `M(α) = L(α)·U`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LuReport {
    pub size: usize,
    /// Entry positions where `M` and `L·U` disagree (expected empty).
    pub mismatches: Vec<(usize, usize, Int, Int)>,
    /// `det M(k)` for `k = 1..=size`, read off the unipotent factors; only
    /// certified (and filled in) when there are no mismatches.
    pub dets: Vec<Int>,
}

impl LuReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Build `L_{i,j} = M_{i-j,j}` (unipotent lower) and `U_{i,j} = C(j,i)`
/// (unipotent upper), verify `M = L·U` entrywise, and certify
/// `det M(k) = 1` for every leading window.
pub fn lu_check(alpha: &[Int], size: usize) -> Result<LuReport> {
    let m = matrix_m(alpha, size)?;
    let mut l = SqMatrix::zeroed(size);
    let mut u = SqMatrix::zeroed(size);
    for i in 0..size {
        for j in 0..=i {
            l.set(i, j, m.get(i - j, j).clone());
        }
        for j in i..size {
            u.set(i, j, binomial(j as u64, i as u64));
        }
    }
    let product = l.mul(&u);
    let mut mismatches = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if product.get(i, j) != m.get(i, j) {
                mismatches.push((i, j, m.get(i, j).clone(), product.get(i, j).clone()));
            }
        }
    }
    // both factors are unipotent triangular, so every leading window of the
    // product has determinant 1·1 once the factorisation is exact
    let dets = if mismatches.is_empty() {
        vec![Int::one(); size]
    } else {
        Vec::new()
    };
    Ok(LuReport {
        size,
        mismatches,
        dets,
    })
}

/// The named integer sequences read off the triangle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeqName {
    /// `s_n = Σ_k l_{n,k}`
    RowSums,
    /// `c_n = l_{2n,n}`
    Central,
    /// `a_n = Σ_k l_{n,k}(k+1)`
    WeightKPlus1,
    /// `b_n = Σ_{k>=2} l_{n,k}(k-1)`
    WeightKMinus1,
    /// `e_n = Σ_k l_{n,k}(2k+1)`
    Weight2KPlus1,
}

pub const ALL_SEQUENCES: [SeqName; 5] = [
    SeqName::RowSums,
    SeqName::Central,
    SeqName::WeightKPlus1,
    SeqName::WeightKMinus1,
    SeqName::Weight2KPlus1,
];

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SeqName::RowSums => "row_sums",
            SeqName::Central => "central",
            SeqName::WeightKPlus1 => "weight_k_plus_1",
            SeqName::WeightKMinus1 => "weight_k_minus_1",
            SeqName::Weight2KPlus1 => "weight_2k_plus_1",
        };
        write!(f, "{name}")
    }
}

impl FromStr for SeqName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_SEQUENCES
            .iter()
            .copied()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

/// First `count` terms of the named sequence.
pub fn sequences(name: SeqName, count: i64) -> Result<Vec<Int>> {
    if count < 1 {
        return Err(Error::Domain(format!("count must be >= 1, got {count}")));
    }
    let count = count as usize;
    let rows_needed = match name {
        SeqName::Central => 2 * (count - 1) + 1,
        _ => count,
    };
    let tri = triangle(rows_needed);
    let term = |n: usize| -> Int {
        let row = &tri.rows()[n];
        match name {
            SeqName::RowSums => row.iter().sum(),
            SeqName::Central => tri.rows()[2 * n][n].clone(),
            SeqName::WeightKPlus1 => row
                .iter()
                .enumerate()
                .map(|(k, v)| v * Int::from(k as i64 + 1))
                .sum(),
            SeqName::WeightKMinus1 => row
                .iter()
                .enumerate()
                .skip(2)
                .map(|(k, v)| v * Int::from(k as i64 - 1))
                .sum(),
            SeqName::Weight2KPlus1 => row
                .iter()
                .enumerate()
                .map(|(k, v)| v * Int::from(2 * k as i64 + 1))
                .sum(),
        }
    };
    Ok((0..count).map(term).collect())
}
