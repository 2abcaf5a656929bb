//! Resultants and discriminants of bivariate polynomials.
//!
//! The representation is `Poly<Poly<GaussRat>>`: a polynomial in an outer
//! variable ζ whose coefficients are exact polynomials in z. The Sylvester
//! determinant is evaluated by fraction-free (Bareiss) elimination so
//! intermediate entries stay polynomial instead of becoming rational
//! functions.

use crate::error::NumError;
use crate::poly::Poly;
use crate::scalar::GaussRat;

pub type Poly2 = Poly<Poly<GaussRat>>;

/// Lifts a polynomial in z to a ζ-constant.
pub fn constant2(p: Poly<GaussRat>) -> Poly2 {
    Poly::constant(p)
}

/// Res_ζ(a, b), a polynomial in z. Exact for exact inputs.
pub fn resultant(a: &Poly2, b: &Poly2) -> Result<Poly<GaussRat>, NumError> {
    let m = a.degree().ok_or(NumError::EmptyInput)?;
    let n = b.degree().ok_or(NumError::EmptyInput)?;
    if m == 0 && n == 0 {
        return Ok(Poly::one());
    }
    if m == 0 {
        // Res(c, b) = c^deg(b)
        return Ok(a.coeff(0).pow(n));
    }
    if n == 0 {
        return Ok(b.coeff(0).pow(m));
    }
    let size = m + n;
    let mut mat: Vec<Vec<Poly<GaussRat>>> = vec![vec![Poly::zero(); size]; size];
    // n rows of a's coefficients (descending), then m rows of b's.
    for row in 0..n {
        for i in 0..=m {
            mat[row][row + i] = a.coeff(m - i);
        }
    }
    for row in 0..m {
        for i in 0..=n {
            mat[n + row][row + i] = b.coeff(n - i);
        }
    }
    Ok(bareiss_det(mat))
}

/// Fraction-free determinant with row pivoting; divisions are exact.
fn bareiss_det(mut mat: Vec<Vec<Poly<GaussRat>>>) -> Poly<GaussRat> {
    let n = mat.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign = false;
    let mut prev = Poly::<GaussRat>::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !mat[r][k].is_zero());
            match swap {
                Some(r) => {
                    mat.swap(k, r);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        let pivot = mat[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = pivot.mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = t.exact_div(&prev);
            }
            mat[i][k] = Poly::zero();
        }
        prev = pivot;
    }
    let det = mat[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Disc_ζ(p) = (−1)^(n(n−1)/2) · Res_ζ(p, ∂p/∂ζ) / lc(p), for deg_ζ p ≥ 2.
pub fn discriminant(p: &Poly2) -> Result<Poly<GaussRat>, NumError> {
    let n = p.degree().ok_or(NumError::EmptyInput)?;
    if n < 2 {
        return Err(NumError::DegreeTooLow { degree: n });
    }
    let dp = derivative_zeta(p);
    let res = resultant(p, &dp)?;
    let lc = p.leading_coeff().unwrap();
    let quo = res.exact_div(lc);
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        quo.neg()
    } else {
        quo
    })
}

pub fn derivative_zeta(p: &Poly2) -> Poly2 {
    p.derivative()
}
