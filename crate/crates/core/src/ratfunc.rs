//! Reduced quotients of integer polynomials.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::Rat;

/// A rational function `num/den` in canonical form: both parts have integer
/// coefficients, their primitive parts are coprime as polynomials, the
/// integer contents are coprime, and the denominator's leading coefficient
/// is positive. The zero function is `0/1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduce `num/den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let num_content = num.content();
        let den_content = den.content();
        let mut num_pp = num.primitive_part();
        let mut den_pp = den.primitive_part();
        let g = num_pp.gcd(&den_pp);
        if !g.is_one() {
            num_pp = num_pp.div_exact(&g).expect("gcd divides numerator");
            den_pp = den_pp.div_exact(&g).expect("gcd divides denominator");
        }
        let c = num_content.gcd(&den_content);
        let mut num = num_pp.scale(&(num_content / &c));
        let mut den = den_pp.scale(&(den_content / &c));
        if den.leading().is_some_and(Signed::is_negative) {
            num = -&num;
            den = -&den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at a rational point; the denominator must not vanish there.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x) / den)
    }

    /// Substitute a polynomial for the indeterminate.
    pub fn compose_poly(&self, p: &Poly) -> Result<RatFunc> {
        RatFunc::new(self.num.compose(p), self.den.compose(p))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Int};

    #[test]
    fn common_polynomial_factor_cancels() {
        // (x^2 - 1)/(x - 1) -> (x + 1)/1
        let f = RatFunc::new(Poly::from_coeffs(&[-1, 0, 1]), Poly::from_coeffs(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &Poly::from_coeffs(&[1, 1]));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn p_over_p_is_one() {
        let p = Poly::from_coeffs(&[3, -5, 7, 11]);
        let f = RatFunc::new(p.clone(), p).unwrap();
        assert_eq!(f.num(), &Poly::one());
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn content_reduction() {
        // (2x)/4 -> x/2
        let f = RatFunc::new(Poly::from_coeffs(&[0, 2]), Poly::from_coeffs(&[4])).unwrap();
        assert_eq!(f.num(), &Poly::x());
        assert_eq!(f.den(), &Poly::from_coeffs(&[2]));
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let f = RatFunc::new(Poly::from_coeffs(&[1]), Poly::from_coeffs(&[2, -1])).unwrap();
        assert!(f.den().leading().unwrap() > &Int::zero());
        assert_eq!(f.num(), &Poly::from_coeffs(&[-1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(Poly::one(), Poly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn reduction_is_idempotent() {
        let f = RatFunc::new(
            Poly::from_coeffs(&[0, 6, 0, -6]),
            Poly::from_coeffs(&[9, 9]),
        )
        .unwrap();
        let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn eval_and_pole() {
        let f = RatFunc::new(Poly::one(), Poly::from_coeffs(&[0, 2])).unwrap();
        assert_eq!(f.eval(&rat(2, 1)).unwrap(), rat(1, 4));
        assert_eq!(f.eval(&rat(0, 1)), Err(Error::Pole));
    }
}
