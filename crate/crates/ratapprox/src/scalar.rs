//! Coefficient arithmetic: exact Gaussian rationals and `f64` complex numbers.
//!
//! Every polynomial in this crate is generic over a coefficient ring. The two
//! rings in use are [`GaussRat`] (elements of ℚ(i), exact) and
//! [`num_complex::Complex<f64>`] (floating point). Exact values convert to
//! floating point with [`GaussRat::to_complex64`]; there is deliberately no
//! conversion in the other direction.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Complex64 = Complex<f64>;

/// Minimal commutative-ring interface used by [`crate::poly::Poly`].
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Rings with exact division by nonzero elements.
pub trait Field: Ring {
    fn div_ref(&self, rhs: &Self) -> Self;

    fn inv(&self) -> Self {
        Self::one().div_ref(self)
    }
}

/// An element of ℚ(i): `re + im·i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// Exact conversion of a finite `f64` (every finite double is dyadic).
    pub fn from_f64_exact(x: f64) -> Self {
        GaussRat::from_real(BigRational::from_float(x).expect("finite float"))
    }

    pub fn from_complex64_exact(z: Complex64) -> Self {
        GaussRat {
            re: BigRational::from_float(z.re).expect("finite float"),
            im: BigRational::from_float(z.im).expect("finite float"),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |self|² = re² + im², an exact nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex::new(big_rational_to_f64(&self.re), big_rational_to_f64(&self.im))
    }
}

/// Conversion that survives numerators/denominators far beyond `f64` range by
/// shifting both down before dividing.
pub fn big_rational_to_f64(r: &BigRational) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    if numer.is_zero() {
        return 0.0;
    }
    let nb = numer.bits() as i64;
    let db = denom.bits() as i64;
    let excess = nb.max(db) - 512;
    if excess > 0 {
        let shifted_n: BigInt = numer >> excess as usize;
        let shifted_d: BigInt = denom >> excess as usize;
        let d = shifted_d.to_f64().unwrap_or(f64::INFINITY);
        if d == 0.0 {
            return if numer.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        shifted_n.to_f64().unwrap_or(f64::INFINITY) / d
    } else {
        numer.to_f64().unwrap_or(f64::NAN) / denom.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*I", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}*I", self.re, self.im)
        } else {
            write!(f, "{}+{}*I", self.re, self.im)
        }
    }
}

macro_rules! gauss_binop {
    ($trait:ident, $method:ident, $impl_method:ident) => {
        impl $trait for &GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                self.$impl_method(rhs)
            }
        }
        impl $trait for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$impl_method(&rhs)
            }
        }
    };
}

gauss_binop!(Add, add, add_ref);
gauss_binop!(Sub, sub, sub_ref);
gauss_binop!(Mul, mul, mul_ref);
gauss_binop!(Div, div, div_ref);

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        self.neg_ref()
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        self.neg_ref()
    }
}

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn neg_ref(&self) -> Self {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Field for GaussRat {
    fn div_ref(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in QQ(i)");
        let n = rhs.norm_sqr();
        let c = rhs.conj();
        let p = self.mul_ref(&c);
        GaussRat {
            re: p.re / &n,
            im: p.im / &n,
        }
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for Complex64 {
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}
