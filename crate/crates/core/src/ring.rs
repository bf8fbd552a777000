//! Minimal commutative-ring abstraction for the transfer-matrix evaluator.
//!
//! The fast Chebyshev evaluator runs the same binary-powering code over the
//! integers (exact values) and over `Z/m` (consistency checks at indices far
//! beyond what exact values allow). `CountingRing` wraps any ring and tallies
//! operations, so tests can pin the O(log n) operation count.

use std::cell::Cell;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Int;

/// A commutative ring with 1, given as a context object so moduli and other
/// parameters live in the ring value rather than in the element type.
pub trait Ring {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Canonical image of an integer.
    fn embed(&self, v: &Int) -> Self::Elem;
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = Int;

    fn zero(&self) -> Int {
        Int::zero()
    }

    fn one(&self) -> Int {
        Int::one()
    }

    fn add(&self, a: &Int, b: &Int) -> Int {
        a + b
    }

    fn sub(&self, a: &Int, b: &Int) -> Int {
        a - b
    }

    fn mul(&self, a: &Int, b: &Int) -> Int {
        a * b
    }

    fn embed(&self, v: &Int) -> Int {
        v.clone()
    }
}

/// The ring `Z/m` with machine-word elements (`m < 2^63`).
#[derive(Clone, Copy, Debug)]
pub struct ModRing {
    modulus: u64,
}

impl ModRing {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        assert!(modulus < 1 << 63, "modulus must fit below 2^63");
        ModRing { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl Ring for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn embed(&self, v: &Int) -> u64 {
        let m = Int::from(self.modulus);
        let r = v.mod_floor(&m);
        debug_assert!(!r.is_negative());
        r.to_u64().expect("residue fits in u64")
    }
}

/// Wraps a ring and counts multiplicative and additive operations.
pub struct CountingRing<'a, R: Ring> {
    inner: &'a R,
    ops: Cell<u64>,
}

impl<'a, R: Ring> CountingRing<'a, R> {
    pub fn new(inner: &'a R) -> Self {
        CountingRing {
            inner,
            ops: Cell::new(0),
        }
    }

    /// Total ring operations performed so far.
    pub fn ops(&self) -> u64 {
        self.ops.get()
    }

    fn bump(&self) {
        self.ops.set(self.ops.get() + 1);
    }
}

impl<R: Ring> Ring for CountingRing<'_, R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }

    fn one(&self) -> R::Elem {
        self.inner.one()
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.bump();
        self.inner.add(a, b)
    }

    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.bump();
        self.inner.sub(a, b)
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.bump();
        self.inner.mul(a, b)
    }

    fn embed(&self, v: &Int) -> R::Elem {
        self.inner.embed(v)
    }
}
