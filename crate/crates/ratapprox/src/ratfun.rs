//! Rational functions in one variable.

use crate::error::ParseError;
use crate::poly::Poly;
use crate::scalar::{Complex64, Field, GaussRat, Ring};
use std::fmt;

/// `num/den` with a nonzero denominator. Exact-mode values are kept reduced
/// (monic denominator, gcd(num, den) a unit); float-mode values are stored
/// as given.
#[derive(Clone, PartialEq)]
pub struct RatFun<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Ring> RatFun<C> {
    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }
}

impl RatFun<GaussRat> {
    /// Builds and fully reduces an exact rational function.
    pub fn new(num: Poly<GaussRat>, den: Poly<GaussRat>) -> Result<Self, ParseError> {
        if den.is_zero() {
            return Err(ParseError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den).expect("nonzero inputs");
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        // normalize: monic denominator
        let lc = den.leading_coeff().unwrap().clone();
        if lc != GaussRat::one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFun { num, den })
    }

    pub fn constant(c: GaussRat) -> Self {
        RatFun {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }

    pub fn eval_exact(&self, z: &GaussRat) -> Option<GaussRat> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(z).div_ref(&d))
    }

    pub fn to_float(&self) -> RatFun<Complex64> {
        RatFun {
            num: self.num.to_float(),
            den: self.den.to_float(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFun::new(num, den).expect("denominators nonzero")
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFun::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("denominators nonzero")
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl RatFun<Complex64> {
    pub fn from_parts_float(num: Poly<Complex64>, den: Poly<Complex64>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFun { num, den }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(&z) / self.den.eval(&z)
    }
}

impl fmt::Debug for RatFun<GaussRat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_common_factors() {
        // (x²-1)/(x-1) reduces to x+1
        let num = Poly::from_i64(&[-1, 0, 1]);
        let den = Poly::from_i64(&[-1, 1]);
        let r = RatFun::new(num, den).unwrap();
        assert_eq!(r.num(), &Poly::from_i64(&[1, 1]));
        assert_eq!(r.den(), &Poly::one());
    }

    #[test]
    fn denominator_made_monic() {
        // 1/(2x-4) -> (1/2)/(x-2)
        let r = RatFun::new(Poly::from_i64(&[1]), Poly::from_i64(&[-4, 2])).unwrap();
        assert_eq!(r.den(), &Poly::from_i64(&[-2, 1]));
        assert_eq!(r.num(), &Poly::new(vec![GaussRat::from_rational(1, 2)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFun::new(Poly::from_i64(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn product_and_quotient_round_trip() {
        let a = RatFun::new(Poly::from_i64(&[1, 2]), Poly::from_i64(&[3, 0, 1])).unwrap();
        let b = RatFun::new(Poly::from_i64(&[5, 1]), Poly::from_i64(&[1, 1])).unwrap();
        let prod = a.mul(&b);
        let back = RatFun::new(prod.num().mul(b.den()), prod.den().mul(b.num())).unwrap();
        assert_eq!(back, a);
    }
}
