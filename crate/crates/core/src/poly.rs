//! Dense univariate polynomials with exact integer or rational coefficients.
//!
//! `Poly` is the workhorse: coefficients are arbitrary-precision integers,
//! stored low degree first, with the canonical-form invariant that the last
//! stored coefficient is nonzero (the zero polynomial is the empty vector,
//! degree -1). `QPoly` carries rational coefficients and only exists for
//! polynomials that genuinely live in Q[z], such as interpolation results.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::{Int, Rat};

/// Dense polynomial over the integers, little-endian coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Int>,
}

impl Poly {
    /// Canonicalize a coefficient vector (trim trailing zeros).
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Int::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Int::zero(), Int::one()])
    }

    pub fn constant(c: Int) -> Self {
        Poly::new(vec![c])
    }

    /// Convenience constructor from machine integers, low degree first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// The coefficient of `x^k` times `x^k`.
    pub fn monomial(c: Int, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_else(Int::zero)
    }

    /// All stored coefficients, low degree first.
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    /// `self * c`.
    pub fn scale(&self, c: &Int) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self * x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Int::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Composition `self(other(x))` by Horner's rule in the polynomial ring.
    pub fn compose(&self, other: &Poly) -> Poly {
        let mut result = Poly::zero();
        for c in self.coeffs.iter().rev() {
            result = &result * other + Poly::constant(c.clone());
        }
        result
    }

    /// Exact rational value at `x` by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    /// Exact integer value at an integer point.
    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when the division is not exact
    /// over the integers.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let lc_d = d.leading().unwrap();
        let mut rem = self.clone();
        let quot_len = (self.degree() - d.degree() + 1) as usize;
        let mut quot = vec![Int::zero(); quot_len];
        while !rem.is_zero() && rem.degree() >= d.degree() {
            let k = (rem.degree() - d.degree()) as usize;
            let (q, r) = rem.leading().unwrap().div_rem(lc_d);
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            rem = &rem - &d.scale(&q).shift(k);
        }
        if rem.is_zero() {
            Some(Poly { coeffs: quot })
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient, via the primitive
    /// polynomial remainder sequence (contents stripped after each
    /// pseudo-division to keep coefficient growth in check).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b.abs_leading();
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        a.abs_leading()
    }

    /// Flip signs so the leading coefficient is positive.
    fn abs_leading(&self) -> Poly {
        match self.leading() {
            Some(lc) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

/// Remainder of `a` against `b` after scaling `a` by a power of `b`'s leading
/// coefficient, so the elimination steps stay in the integers. Used only by
/// `gcd`, which strips contents afterwards.
fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
    let d = b.degree();
    debug_assert!(d >= 0);
    let lc_b = b.leading().unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree() >= d {
        let k = (r.degree() - d) as usize;
        let lead = r.leading().unwrap().clone();
        r = &r.scale(&lc_b) - &b.scale(&lead).shift(k);
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), Int::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }
    }
}

impl Add<Poly> for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub<Poly> for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul<Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dense polynomial over the rationals, little-endian coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Lagrange interpolation through distinct nodes.
    ///
    /// Panics if two nodes coincide; callers pass consecutive integers.
    pub fn interpolate(points: &[(Rat, Rat)]) -> QPoly {
        let mut acc = QPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            // numerator prod_{j != i} (z - x_j), denominator prod (x_i - x_j)
            let mut basis = vec![Rat::one()];
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = mul_linear(&basis, xj);
                let diff = xi - xj;
                assert!(!diff.is_zero(), "interpolation nodes must be distinct");
                denom *= diff;
            }
            let w = yi / denom;
            for (k, b) in basis.iter().enumerate() {
                if k >= acc.coeffs.len() {
                    acc.coeffs.resize(k + 1, Rat::zero());
                }
                acc.coeffs[k] += b * &w;
            }
        }
        QPoly::new(acc.coeffs)
    }
}

/// Multiply a little-endian rational coefficient vector by `(z - root)`.
fn mul_linear(coeffs: &[Rat], root: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); coeffs.len() + 1];
    for (k, c) in coeffs.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= c * root;
    }
    out
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
