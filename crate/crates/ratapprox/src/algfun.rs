//! Defining equations `P(y, z) = 0` and their initial tuples.
//!
//! The text grammar accepts the variables `y` and `z`, the imaginary unit
//! `I`, integer and decimal literals (decimals convert to exact rationals),
//! the operators `+ - * / ^`, parentheses, and at most one `=`, which is
//! read as "left side minus right side". Division is only needed for
//! rational initial-tuple entries; a defining equation must collect to a
//! polynomial in `y`.

use crate::error::ParseError;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::scalar::{Complex64, Field, GaussRat, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients `[P_0, ..., P_k]` of `P(y,z) = Σ P_i(z)·y^i` with `P_k ≠ 0`
/// and `k ≥ 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct DefiningPolynomial {
    coeffs: Vec<Poly<GaussRat>>,
}

impl DefiningPolynomial {
    pub fn new(mut coeffs: Vec<Poly<GaussRat>>) -> Result<Self, ParseError> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(ParseError::ZeroLeadingCoefficient);
        }
        Ok(DefiningPolynomial { coeffs })
    }

    /// Degree in y.
    pub fn k(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly<GaussRat>] {
        &self.coeffs
    }

    pub fn p(&self, i: usize) -> &Poly<GaussRat> {
        &self.coeffs[i]
    }

    pub fn p_k(&self) -> &Poly<GaussRat> {
        self.coeffs.last().unwrap()
    }

    /// The rational functions `R_i = −P_i/P_k` for `0 ≤ i ≤ k−1`, reduced.
    pub fn symbol_coefficients(&self) -> Vec<RatFun<GaussRat>> {
        let pk = self.p_k();
        (0..self.k())
            .map(|i| RatFun::new(self.coeffs[i].neg(), pk.clone()).expect("P_k nonzero"))
            .collect()
    }

    /// View as a polynomial in y over ℚ(i)\[z\].
    pub fn as_poly2(&self) -> Poly<Poly<GaussRat>> {
        Poly::new(self.coeffs.clone())
    }

    /// Float copies of the coefficient polynomials, for hot evaluation loops.
    pub fn to_float(&self) -> Vec<Poly<Complex64>> {
        self.coeffs.iter().map(|p| p.to_float()).collect()
    }

    /// Renders back to the input grammar; parsing the result reproduces the
    /// identical coefficient list.
    pub fn render_equation(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let coeff = format!("({})", render_zpoly(c));
                match i {
                    0 => coeff,
                    1 => format!("{coeff}*y"),
                    _ => format!("{coeff}*y^{i}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// The `k` starting rational functions `{q_0, ..., q_{k−1}}`, oldest first.
#[derive(Clone, PartialEq, Debug)]
pub struct InitialTuple {
    entries: Vec<RatFun<GaussRat>>,
}

impl InitialTuple {
    pub fn new(entries: Vec<RatFun<GaussRat>>) -> Result<Self, ParseError> {
        if entries.is_empty() || entries.iter().all(|e| e.is_zero()) {
            return Err(ParseError::EmptyInitialTuple);
        }
        Ok(InitialTuple { entries })
    }

    /// `{0, ..., 0, 1}`: the tuple whose approximants never have spurious
    /// poles.
    pub fn standard(k: usize) -> Self {
        let mut entries = vec![RatFun::from_poly(Poly::zero()); k];
        entries[k - 1] = RatFun::from_poly(Poly::one());
        InitialTuple { entries }
    }

    pub fn from_polys(polys: Vec<Poly<GaussRat>>) -> Result<Self, ParseError> {
        InitialTuple::new(polys.into_iter().map(RatFun::from_poly).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RatFun<GaussRat>] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &RatFun<GaussRat> {
        &self.entries[i]
    }

    /// Least common multiple of the entry denominators (monic ones give 1).
    pub fn denominator_lcm(&self) -> Poly<GaussRat> {
        let mut acc: Poly<GaussRat> = Poly::one();
        for e in &self.entries {
            let g = acc.gcd(e.den()).expect("denominators nonzero");
            acc = acc.mul(&e.den().exact_div(&g));
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Y,
    Z,
    ImagUnit,
    Num(BigRational),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => toks.push((Tok::Plus, pos)),
            '-' => toks.push((Tok::Minus, pos)),
            '*' => toks.push((Tok::Star, pos)),
            '/' => toks.push((Tok::Slash, pos)),
            '^' => toks.push((Tok::Caret, pos)),
            '(' => toks.push((Tok::LParen, pos)),
            ')' => toks.push((Tok::RParen, pos)),
            '=' => toks.push((Tok::Equals, pos)),
            'y' => toks.push((Tok::Y, pos)),
            'z' => toks.push((Tok::Z, pos)),
            'I' => toks.push((Tok::ImagUnit, pos)),
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let mut frac_len = 0usize;
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    let fs = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    frac_len = i - fs;
                    if frac_len == 0 {
                        return Err(ParseError::Syntax {
                            pos: i,
                            message: "expected digits after decimal point".into(),
                        });
                    }
                }
                let digits: String = text[start..i].chars().filter(|&c| c != '.').collect();
                let numer: BigInt = digits.parse().expect("digit string");
                let denom = BigInt::from(10u32).pow(frac_len as u32);
                toks.push((Tok::Num(BigRational::new(numer, denom)), pos));
                continue;
            }
            c if c.is_alphabetic() => {
                return Err(ParseError::NotBivariate {
                    pos,
                    name: c.to_string(),
                });
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    message: format!("unexpected character '{c}'"),
                });
            }
        }
        i += 1;
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser: recursive descent evaluating directly into bivariate rationals
// ---------------------------------------------------------------------------

type YZPoly = Poly<Poly<GaussRat>>; // in y, coefficients in z

#[derive(Clone)]
struct BiRat {
    num: YZPoly,
    den: YZPoly,
}

impl BiRat {
    fn from_poly(p: YZPoly) -> Self {
        BiRat {
            num: p,
            den: Poly::one(),
        }
    }

    fn constant(c: GaussRat) -> Self {
        BiRat::from_poly(Poly::constant(Poly::constant(c)))
    }

    fn add(&self, o: &Self) -> Self {
        BiRat {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        BiRat {
            num: self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        BiRat {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    fn div(&self, o: &Self, pos: usize) -> Result<Self, ParseError> {
        if o.num.is_zero() {
            return Err(ParseError::DivisionByZero { pos });
        }
        // Division by a constant scales the numerator directly, so literal
        // fractions like 3/2 do not rescale the collected equation.
        if let Some(c) = o.as_constant() {
            let inv = c.inv();
            return Ok(BiRat {
                num: self.num.scale(&Poly::constant(inv)),
                den: self.den.clone(),
            });
        }
        Ok(BiRat {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        })
    }

    /// `Some(value)` when the expression is a plain scalar.
    fn as_constant(&self) -> Option<GaussRat> {
        let num_const = match self.num.degree() {
            None => GaussRat::zero(),
            Some(0) if self.num.coeff(0).is_constant() => self.num.coeff(0).coeff(0),
            _ => return None,
        };
        let den_const = match self.den.degree() {
            Some(0) if self.den.coeff(0).is_constant() => self.den.coeff(0).coeff(0),
            _ => return None,
        };
        Some(num_const.div_ref(&den_const))
    }

    fn neg(&self) -> Self {
        BiRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn pow(&self, e: usize) -> Self {
        BiRat {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiRat, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiRat, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<BiRat, ParseError> {
        // Unary minus negates the whole exponentiated factor, so "-y^2"
        // means -(y^2).
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                    let e: usize = n.to_integer().try_into().map_err(|_| ParseError::Syntax {
                        pos,
                        message: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::Syntax {
                    pos,
                    message: "expected nonnegative integer exponent after '^'".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<BiRat, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Y) => Ok(BiRat::from_poly(Poly::monomial(Poly::one(), 1))),
            Some(Tok::Z) => Ok(BiRat::from_poly(Poly::constant(Poly::monomial(
                GaussRat::one(),
                1,
            )))),
            Some(Tok::ImagUnit) => Ok(BiRat::constant(GaussRat::i())),
            Some(Tok::Num(n)) => Ok(BiRat::constant(GaussRat::from_real(n))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax {
                        pos: self.pos(),
                        message: "expected ')'".into(),
                    }),
                }
            }
            Some(Tok::Minus) => Ok(self.factor()?.neg()),
            other => Err(ParseError::Syntax {
                pos,
                message: format!("expected a value, found {:?}", other),
            }),
        }
    }
}

fn parse_expression(text: &str) -> Result<BiRat, ParseError> {
    let toks = lex(text)?;
    let end = text.len();
    let mut p = Parser { toks, idx: 0, end };
    let lhs = p.expr()?;
    let value = if matches!(p.peek(), Some(Tok::Equals)) {
        p.bump();
        let rhs = p.expr()?;
        lhs.sub(&rhs)
    } else {
        lhs
    };
    if p.idx != p.toks.len() {
        return Err(ParseError::Syntax {
            pos: p.pos(),
            message: "unexpected trailing input".into(),
        });
    }
    Ok(value)
}

/// Parses a defining equation into its y-coefficient polynomials. An `=`
/// sign subtracts the right side; denominators free of y are cleared.
pub fn parse_defining(text: &str) -> Result<DefiningPolynomial, ParseError> {
    let v = parse_expression(text)?;
    if v.den.degree().is_some_and(|d| d > 0) {
        return Err(ParseError::NonPolynomial);
    }
    DefiningPolynomial::new(v.num.coeffs().to_vec())
}

/// Parses one rational function of z (no y allowed).
pub fn parse_ratfun_z(text: &str) -> Result<RatFun<GaussRat>, ParseError> {
    let v = parse_expression(text)?;
    if v.num.degree().is_some_and(|d| d > 0) || v.den.degree().is_some_and(|d| d > 0) {
        return Err(ParseError::InitNotFunctionOfZ);
    }
    RatFun::new(v.num.coeff(0), v.den.coeff(0))
}

/// Parses a comma-separated initial tuple, oldest entry first.
pub fn parse_initial(text: &str) -> Result<InitialTuple, ParseError> {
    let entries = split_top_level(text)
        .into_iter()
        .map(parse_ratfun_z)
        .collect::<Result<Vec<_>, _>>()?;
    InitialTuple::new(entries)
}

/// Parses a constant (used for CLI values of z and C).
pub fn parse_constant(text: &str) -> Result<GaussRat, ParseError> {
    let r = parse_ratfun_z(text)?;
    if r.den().degree() != Some(0) || !r.num().is_constant() {
        return Err(ParseError::Syntax {
            pos: 0,
            message: "expected a constant".into(),
        });
    }
    Ok(r.num().coeff(0).div_ref(&r.den().coeff(0)))
}

// Splits on commas that are not nested in parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                pieces.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    pieces
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn render_gauss(c: &GaussRat) -> String {
    if c.im().is_zero() {
        render_rational(c.re())
    } else if c.re().is_zero() {
        if c.im().is_one() {
            "I".into()
        } else if (-c.im()).is_one() {
            "-I".into()
        } else {
            format!("{}*I", render_rational(c.im()))
        }
    } else {
        let im_abs = c.im().abs();
        let sign = if c.im().is_negative() { "-" } else { "+" };
        let im_part = if im_abs.is_one() {
            "I".into()
        } else {
            format!("{}*I", render_rational(&im_abs))
        };
        format!("({}{}{})", render_rational(c.re()), sign, im_part)
    }
}

/// Renders a polynomial in z back into the input grammar.
pub fn render_zpoly(p: &Poly<GaussRat>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let cs = render_gauss(c);
            match i {
                0 => cs,
                1 if cs == "1" => "z".into(),
                1 => format!("{cs}*z"),
                _ if cs == "1" => format!("z^{i}"),
                _ => format!("{cs}*z^{i}"),
            }
        })
        .collect();
    terms.join(" + ")
}
