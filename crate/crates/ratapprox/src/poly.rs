//! Dense univariate polynomials over a generic coefficient ring.
//!
//! Coefficients are stored by ascending degree with no trailing zeros, so the
//! zero polynomial is the empty list and `degree()` returns `None` for it
//! rather than a sentinel integer.

use crate::error::NumError;
use crate::scalar::{big_rational_to_f64, Complex64, Field, GaussRat, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> Poly<C> {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros so the leading coefficient is nonzero.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![C::one()],
        }
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c·x^n`.
    pub fn monomial(c: C, n: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    /// `x`
    pub fn var() -> Self {
        Poly::monomial(C::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^n` (zero when beyond the stored length).
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add_ref(&rhs.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub_ref(&rhs.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut m = C::zero();
            for _ in 0..i {
                m = m.add_ref(&C::one());
            }
            out.push(m.mul_ref(c));
        }
        Poly::new(out)
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl<C: Field> Poly<C> {
    /// Euclidean division: `self = q·rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < rhs.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let dlc = rhs.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let dd = rhs.coeffs.len() - 1;
        let mut quot = vec![C::zero(); rem.len() - dd];
        while rem.len() > dd {
            let last = rem.last().unwrap().clone();
            if last.is_zero() {
                rem.pop();
                continue;
            }
            let q = last.div_ref(&dlc);
            let pos = rem.len() - 1 - dd;
            quot[pos] = q.clone();
            for (i, c) in rhs.coeffs.iter().enumerate() {
                let t = q.mul_ref(c);
                rem[pos + i] = rem[pos + i].sub_ref(&t);
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Division known to be exact; panics if a remainder survives.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Returns `Some(self / rhs)` only when the division leaves no remainder.
    pub fn try_exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.inv();
                self.scale(&inv)
            }
        }
    }
}

impl Poly<GaussRat> {
    pub fn to_float(&self) -> Poly<Complex64> {
        Poly::new(self.coeffs.iter().map(|c| c.to_complex64()).collect())
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex64();
        }
        acc
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| GaussRat::from_integer(c)).collect())
    }

    /// Least common multiple of all coefficient denominators (re and im).
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.re().denom());
            l = l.lcm(c.im().denom());
        }
        l
    }

    /// Scales by the denominator lcm, producing a ℤ\[i\]-polynomial.
    fn cleared(&self) -> Poly<GaussRat> {
        let l = self.denominator_lcm();
        if l.is_one() {
            return self.clone();
        }
        let f = GaussRat::from_real(num_rational::BigRational::from_integer(l));
        self.scale(&f)
    }

    /// Monic exact gcd over ℚ(i).
    ///
    /// Errors with [`NumError::BothZero`] when both inputs vanish. A modular
    /// image over GF(p²) certifies the common trivial case cheaply; the
    /// subresultant remainder sequence handles the rest without rational
    /// blow-up.
    pub fn gcd(&self, rhs: &Self) -> Result<Self, NumError> {
        if self.is_zero() && rhs.is_zero() {
            return Err(NumError::BothZero);
        }
        if self.is_zero() {
            return Ok(rhs.monic());
        }
        if rhs.is_zero() {
            return Ok(self.monic());
        }
        if self.is_constant() || rhs.is_constant() {
            return Ok(Poly::one());
        }
        let a = self.cleared();
        let b = rhs.cleared();
        if modular_gcd_is_trivial(&a, &b) == Some(true) {
            return Ok(Poly::one());
        }
        Ok(subresultant_gcd(&a, &b).monic())
    }
}

impl Poly<Complex64> {
    pub fn from_f64(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Max |coefficient|, used as a scale for backward-error bounds.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Pseudo-remainder: `lc(g)^(deg f - deg g + 1)·f mod g`, staying in ℤ\[i\].
fn pseudo_rem(f: &Poly<GaussRat>, g: &Poly<GaussRat>) -> Poly<GaussRat> {
    let df = f.degree().unwrap();
    let dg = g.degree().unwrap();
    debug_assert!(df >= dg);
    let lc = g.leading_coeff().unwrap().clone();
    let mut rem = f.clone();
    for _ in 0..=(df - dg) {
        let dr = match rem.degree() {
            Some(d) if d >= dg => d,
            _ => {
                rem = rem.scale(&lc);
                continue;
            }
        };
        let top = rem.leading_coeff().unwrap().clone();
        rem = rem.scale(&lc);
        let t = g.shift_up(dr - dg).scale(&top);
        rem = rem.sub(&t);
        debug_assert!(rem.degree().is_none_or(|d| d < dr));
    }
    rem
}

fn pow_gauss(base: &GaussRat, e: usize) -> GaussRat {
    let mut acc = GaussRat::one();
    for _ in 0..e {
        acc = acc.mul_ref(base);
    }
    acc
}

/// Subresultant PRS gcd over ℤ\[i\] (result up to a unit).
fn subresultant_gcd(f: &Poly<GaussRat>, g: &Poly<GaussRat>) -> Poly<GaussRat> {
    let (mut a, mut b) = if f.degree() >= g.degree() {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    let mut da = a.degree().unwrap();
    let mut db = b.degree().unwrap();
    let mut psi = GaussRat::from_integer(-1);
    let mut beta = if (da - db) % 2 == 0 {
        GaussRat::from_integer(-1)
    } else {
        GaussRat::one()
    };
    loop {
        let delta = da - db;
        let rem = pseudo_rem(&a, &b);
        if rem.is_zero() {
            return b;
        }
        let r = rem.scale(&beta.inv());
        if r.is_constant() {
            return Poly::one();
        }
        let lb = b.leading_coeff().unwrap().clone();
        // Brown's subresultant update.
        psi = if delta == 0 {
            psi
        } else {
            let num = pow_gauss(&lb.neg_ref(), delta);
            num.div_ref(&pow_gauss(&psi, delta - 1))
        };
        a = b;
        b = r;
        da = a.degree().unwrap();
        db = b.degree().unwrap();
        let delta_next = da - db;
        beta = lb.neg_ref().mul_ref(&pow_gauss(&psi, delta_next));
    }
}

// ---------------------------------------------------------------------------
// Modular certificate for trivial gcd: work in GF(p²) = F_p[i]/(i²+1) with the
// Mersenne prime p = 2^61 - 1 (p ≡ 3 mod 4, so the quotient is a field). The
// mod-p image of the true gcd divides the mod-p gcd whenever the leading
// coefficients stay nonzero, so a constant modular gcd proves gcd = 1.
// ---------------------------------------------------------------------------

const MP: u64 = (1u64 << 61) - 1;

fn mp_add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MP {
        s - MP
    } else {
        s
    }
}

fn mp_sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MP - b
    }
}

fn mp_mul(a: u64, b: u64) -> u64 {
    let p = (a as u128) * (b as u128);
    let lo = (p & ((1u128 << 61) - 1)) as u64;
    let hi = (p >> 61) as u64;
    let mut s = lo + hi;
    if s >= MP {
        s -= MP;
    }
    s
}

fn mp_pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mp_mul(acc, a);
        }
        a = mp_mul(a, a);
        e >>= 1;
    }
    acc
}

fn mp_inv(a: u64) -> u64 {
    mp_pow(a, MP - 2)
}

#[derive(Clone, Copy, PartialEq)]
struct Gf2 {
    re: u64,
    im: u64,
}

impl Gf2 {
    fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn sub(self, o: Gf2) -> Gf2 {
        Gf2 {
            re: mp_sub(self.re, o.re),
            im: mp_sub(self.im, o.im),
        }
    }

    fn mul(self, o: Gf2) -> Gf2 {
        Gf2 {
            re: mp_sub(mp_mul(self.re, o.re), mp_mul(self.im, o.im)),
            im: mp_add(mp_mul(self.re, o.im), mp_mul(self.im, o.re)),
        }
    }

    fn inv(self) -> Gf2 {
        let n = mp_add(mp_mul(self.re, self.re), mp_mul(self.im, self.im));
        let ni = mp_inv(n);
        Gf2 {
            re: mp_mul(self.re, ni),
            im: mp_mul(mp_sub(0, self.im), ni),
        }
    }
}

fn bigint_mod_p(n: &BigInt) -> u64 {
    let p = BigInt::from(MP);
    let mut r = n % &p;
    if r.is_negative() {
        r += &p;
    }
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Reduces an integral Gaussian-rational coefficient mod p; `None` if a
/// denominator vanishes mod p (never for cleared inputs, kept defensively).
fn gauss_mod_p(c: &GaussRat) -> Option<Gf2> {
    let rd = bigint_mod_p(c.re().denom());
    let id = bigint_mod_p(c.im().denom());
    if rd == 0 || id == 0 {
        return None;
    }
    Some(Gf2 {
        re: mp_mul(bigint_mod_p(c.re().numer()), mp_inv(rd)),
        im: mp_mul(bigint_mod_p(c.im().numer()), mp_inv(id)),
    })
}

/// `Some(true)` proves gcd(f, g) = 1; `Some(false)`/`None` mean "unknown".
fn modular_gcd_is_trivial(f: &Poly<GaussRat>, g: &Poly<GaussRat>) -> Option<bool> {
    let to_mod = |p: &Poly<GaussRat>| -> Option<Vec<Gf2>> {
        p.coeffs().iter().map(gauss_mod_p).collect()
    };
    let mut a = to_mod(f)?;
    let mut b = to_mod(g)?;
    // Leading coefficients must survive the reduction for the degree argument.
    if a.last()?.is_zero() || b.last()?.is_zero() {
        return None;
    }
    let trim = |v: &mut Vec<Gf2>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        let lb_inv = b.last().unwrap().inv();
        while a.len() >= b.len() {
            let top = *a.last().unwrap();
            if top.is_zero() {
                a.pop();
                continue;
            }
            let q = top.mul(lb_inv);
            let off = a.len() - b.len();
            for i in 0..b.len() {
                a[off + i] = a[off + i].sub(q.mul(b[i]));
            }
            trim(&mut a);
        }
        if a.is_empty() {
            return Some(false); // b divides a: gcd nontrivial mod p
        }
        std::mem::swap(&mut a, &mut b);
    }
    Some(!b.is_empty())
}

impl fmt::Debug for Poly<GaussRat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*x^{}", c, i)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly<Complex64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl fmt::Debug for Poly<Poly<GaussRat>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write!(f, "[y^{}: {:?}] ", i, c)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Exact real-root machinery (Sturm chains over ℚ). Floating-point root
// finding cannot certify that a high-degree polynomial with huge integer
// coefficients is real-rooted — the f64 image of the coefficients is already
// perturbed — so reality and interlacing are decided exactly.
// ---------------------------------------------------------------------------

fn all_real_poly(p: &Poly<GaussRat>) -> bool {
    p.coeffs().iter().all(|c| c.is_real())
}

/// Multiplies by the positive factor that clears denominators and strips
/// integer content; the sign of every coefficient is preserved.
fn primitive_positive(p: &Poly<GaussRat>) -> Poly<GaussRat> {
    if p.is_zero() {
        return Poly::zero();
    }
    let l = p.denominator_lcm();
    let scaled = p.scale(&GaussRat::from_real(num_rational::BigRational::from_integer(l)));
    let mut content = BigInt::zero();
    for c in scaled.coeffs() {
        content = content.gcd(c.re().numer());
    }
    if content.is_zero() || content.is_one() {
        return scaled;
    }
    let inv = GaussRat::from_real(num_rational::BigRational::new(BigInt::one(), content));
    scaled.scale(&inv)
}

fn sign_of(c: &GaussRat) -> i32 {
    if c.re().is_positive() {
        1
    } else if c.re().is_negative() {
        -1
    } else {
        0
    }
}

/// Negated-remainder chain `f_0 = p, f_1 = q, f_{k+1} = −(f_{k−1} mod f_k)`,
/// each entry normalized by a positive factor. `None` unless all
/// coefficients are real.
pub fn negated_remainder_chain(
    p: &Poly<GaussRat>,
    q: &Poly<GaussRat>,
) -> Option<Vec<Poly<GaussRat>>> {
    if !all_real_poly(p) || !all_real_poly(q) {
        return None;
    }
    let mut chain = vec![primitive_positive(p), primitive_positive(q)];
    loop {
        let a = &chain[chain.len() - 2];
        let b = &chain[chain.len() - 1];
        if b.is_zero() {
            chain.pop();
            return Some(chain);
        }
        let (_, r) = a.div_rem(b);
        let next = primitive_positive(&r.neg());
        chain.push(next);
    }
}

fn sign_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact number of distinct real roots of a real-coefficient polynomial
/// (Sturm's theorem; multiple roots counted once). `None` for nonreal
/// coefficients or the zero polynomial.
pub fn count_distinct_real_roots(p: &Poly<GaussRat>) -> Option<usize> {
    if p.is_zero() {
        return None;
    }
    if p.degree() == Some(0) {
        return Some(0);
    }
    let chain = negated_remainder_chain(p, &p.derivative())?;
    let at_plus_inf = chain.iter().map(|f| sign_of(f.leading_coeff().unwrap()));
    let at_minus_inf = chain.iter().map(|f| {
        let s = sign_of(f.leading_coeff().unwrap());
        if f.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    });
    let v_minus = sign_variations(at_minus_inf);
    let v_plus = sign_variations(at_plus_inf);
    Some(v_minus - v_plus)
}

/// Certifies that every root of `p` is real (exactly, multiplicities
/// allowed): the Sturm count of distinct real roots must reach the degree
/// of the square-free part, which the chain exposes as its last entry.
pub fn all_roots_real_exact(p: &Poly<GaussRat>) -> Option<bool> {
    let d = p.degree()?;
    if d == 0 {
        return Some(true);
    }
    let chain = negated_remainder_chain(p, &p.derivative())?;
    let gcd_deg = chain.last().and_then(|f| f.degree()).unwrap_or(0);
    let distinct = count_distinct_real_roots(p)?;
    Some(distinct == d - gcd_deg)
}

/// Exact strict-interlacing test for real-rooted polynomials with
/// `deg q = deg p − 1`: after making both leading coefficients positive the
/// negated-remainder chain must lose exactly one degree per step and keep
/// every leading coefficient positive (the continued-fraction form of the
/// Hermite–Kakeya–Obreschkoff theorem). A `true` verdict certifies that
/// both polynomials are real-rooted, simple, and strictly interlacing.
pub fn interlace_strictly_exact(p: &Poly<GaussRat>, q: &Poly<GaussRat>) -> Option<bool> {
    let dp = p.degree()?;
    let dq = q.degree()?;
    if dp != dq + 1 {
        return Some(false);
    }
    if !all_real_poly(p) || !all_real_poly(q) {
        return None;
    }
    let fix = |f: &Poly<GaussRat>| {
        if sign_of(f.leading_coeff().unwrap()) < 0 {
            f.neg()
        } else {
            f.clone()
        }
    };
    let chain = negated_remainder_chain(&fix(p), &fix(q))?;
    if chain.len() != dp + 1 {
        return Some(false);
    }
    for (i, f) in chain.iter().enumerate() {
        if f.degree() != Some(dp - i) {
            return Some(false);
        }
        if sign_of(f.leading_coeff().unwrap()) <= 0 {
            return Some(false);
        }
    }
    Some(true)
}

/// Real-coefficient view of an exact polynomial, `None` if any coefficient
/// has a nonzero imaginary part.
pub fn real_coeffs(p: &Poly<GaussRat>) -> Option<Vec<f64>> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_real() {
                Some(big_rational_to_f64(c.re()))
            } else {
                None
            }
        })
        .collect()
}
