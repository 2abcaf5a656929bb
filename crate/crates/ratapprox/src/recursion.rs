//! The recursion `−q_n = Σ P_{k−i}/P_k · q_{n−i}` generated by a defining
//! equation, in two forms:
//!
//! * exact: numerators `N_n` with `q_n = N_n/(D·P_k^n)` where `D` absorbs
//!   the denominators of a rational initial tuple (ratios are unchanged by
//!   `D`, so the approximants do not see it);
//! * numeric: a sup-norm-rescaled sliding window at a fixed `z`, which is
//!   how `r_n(z)` is evaluated for large `n` without overflow.

use crate::algfun::{DefiningPolynomial, InitialTuple};
use crate::error::RecursionError;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::scalar::{Complex64, GaussRat, Ring};

pub const DEFAULT_N_MAX: usize = 50;

/// Exact representation of `q_0 .. q_{max_n}`.
#[derive(Clone, Debug)]
pub struct SequenceRep {
    def: DefiningPolynomial,
    init: InitialTuple,
    prefactor: Poly<GaussRat>,
    numerators: Vec<Poly<GaussRat>>,
}

impl SequenceRep {
    pub fn def(&self) -> &DefiningPolynomial {
        &self.def
    }

    pub fn init(&self) -> &InitialTuple {
        &self.init
    }

    /// Common denominator absorbed from the initial tuple.
    pub fn prefactor(&self) -> &Poly<GaussRat> {
        &self.prefactor
    }

    pub fn max_n(&self) -> usize {
        self.numerators.len() - 1
    }

    /// `N_n`, where `q_n = N_n/(prefactor·P_k^n)`.
    pub fn numerator(&self, n: usize) -> &Poly<GaussRat> {
        &self.numerators[n]
    }

    /// Exact value of `q_n` as a rational function.
    pub fn q(&self, n: usize) -> RatFun<GaussRat> {
        let den = self.prefactor.mul(&self.def.p_k().pow(n));
        RatFun::new(self.numerators[n].clone(), den).expect("P_k nonzero")
    }

    /// The approximant `r_n = q_n/q_{n−1} = N_n/(P_k·N_{n−1})`, fully
    /// reduced by exact gcd cancellation.
    pub fn ratio_function(&self, n: usize) -> Result<RatFun<GaussRat>, RecursionError> {
        let k = self.def.k();
        if n < k || n > self.max_n() {
            return Err(RecursionError::IndexOutOfRange {
                n,
                max: self.max_n(),
            });
        }
        if self.numerators[n - 1].is_zero() {
            return Err(RecursionError::ZeroDenominatorSequence { n: n - 1 });
        }
        let pk = self.def.p_k();
        let mut num = self.numerators[n].clone();
        let mut den = pk.mul(&self.numerators[n - 1]);
        // The numerators often pile up powers of P_k itself; stripping them
        // first keeps the remaining gcd trivial.
        if !pk.is_constant() && !num.is_zero() {
            while let (Some(a), Some(b)) = (num.try_exact_div(pk), den.try_exact_div(pk)) {
                num = a;
                den = b;
            }
        }
        Ok(RatFun::new(num, den).expect("denominator nonzero"))
    }
}

/// Runs the cleared recursion `−N_n = Σ_{i=1..k} P_{k−i}·P_k^{i−1}·N_{n−i}`
/// exactly up to `n_max`.
pub fn generate_exact(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    n_max: usize,
) -> Result<SequenceRep, RecursionError> {
    let k = def.k();
    if init.len() != k {
        return Err(RecursionError::InitLengthMismatch {
            expected: k,
            got: init.len(),
        });
    }
    let prefactor = init.denominator_lcm();
    let pk = def.p_k();
    let mut numerators: Vec<Poly<GaussRat>> = Vec::with_capacity(n_max + 1);
    let mut pk_pow: Poly<GaussRat> = Poly::one();
    for n in 0..k.min(n_max + 1) {
        let e = init.entry(n);
        let cleared = e.num().mul(&prefactor.exact_div(e.den()));
        numerators.push(cleared.mul(&pk_pow));
        pk_pow = pk_pow.mul(pk);
    }
    // fixed multipliers P_{k−i}·P_k^{i−1}
    let mut mults: Vec<Poly<GaussRat>> = Vec::with_capacity(k);
    let mut pw: Poly<GaussRat> = Poly::one();
    for i in 1..=k {
        mults.push(def.p(k - i).mul(&pw));
        pw = pw.mul(pk);
    }
    for n in k..=n_max {
        let mut acc: Poly<GaussRat> = Poly::zero();
        for i in 1..=k {
            acc = acc.add(&mults[i - 1].mul(&numerators[n - i]));
        }
        let next = acc.neg();
        let bound = (1..=k)
            .filter_map(|i| {
                let dn = numerators[n - i].degree()?;
                Some(dn + mults[i - 1].degree().unwrap_or(0))
            })
            .max();
        if let Some(d) = next.degree() {
            assert!(
                d <= bound.expect("nonzero term exists"),
                "degree growth bound violated at n = {n}"
            );
        }
        numerators.push(next);
    }
    Ok(SequenceRep {
        def: def.clone(),
        init: init.clone(),
        prefactor,
        numerators,
    })
}

/// Sliding-window numeric iteration at a fixed point `z`.
///
/// The window holds `(q_m, q_{m−1}, …, q_{m−k})` rescaled to sup-norm one
/// after every step; `scale_log` accumulates the stripped magnitude so
/// `q_m = window[0]·exp(scale_log)`.
#[derive(Clone, Debug)]
pub struct RatioIterState {
    z: Complex64,
    r_at_z: Vec<Complex64>,
    window: Vec<Complex64>,
    scale_log: f64,
    m: usize,
}

impl RatioIterState {
    pub fn new(
        def: &DefiningPolynomial,
        init: &InitialTuple,
        z: Complex64,
    ) -> Result<Self, RecursionError> {
        let k = def.k();
        if init.len() != k {
            return Err(RecursionError::InitLengthMismatch {
                expected: k,
                got: init.len(),
            });
        }
        check_off_pole_locus(def, init, z)?;
        let pk_val = def.p_k().eval_complex(z);
        // R_{k-1}(z), ..., R_0(z)
        let r_at_z: Vec<Complex64> = (0..k)
            .rev()
            .map(|i| -def.p(i).eval_complex(z) / pk_val)
            .collect();
        let mut window: Vec<Complex64> = (0..k)
            .rev()
            .map(|i| init.entry(i).eval(z))
            .collect();
        window.push(Complex64::new(0.0, 0.0)); // below-range slot, never read
        let mut state = RatioIterState {
            z,
            r_at_z,
            window,
            scale_log: 0.0,
            m: k - 1,
        };
        state.rescale();
        Ok(state)
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn scale_log(&self) -> f64 {
        self.scale_log
    }

    pub fn window(&self) -> &[Complex64] {
        &self.window
    }

    /// `q_m(z)` up to the factor `exp(scale_log)`.
    pub fn front(&self) -> Complex64 {
        self.window[0]
    }

    pub fn step(&mut self) {
        let k = self.r_at_z.len();
        let mut next = Complex64::new(0.0, 0.0);
        for i in 1..=k {
            next += self.r_at_z[i - 1] * self.window[i - 1];
        }
        for j in (1..self.window.len()).rev() {
            self.window[j] = self.window[j - 1];
        }
        self.window[0] = next;
        self.m += 1;
        self.rescale();
    }

    fn rescale(&mut self) {
        let sup = self
            .window
            .iter()
            .map(|w| w.norm())
            .fold(0.0_f64, f64::max);
        if sup > 0.0 && sup.is_finite() {
            for w in self.window.iter_mut() {
                *w /= sup;
            }
            self.scale_log += sup.ln();
        }
    }

    /// `r_m(z) = q_m/q_{m−1}`; the rescaling cancels in the quotient.
    pub fn ratio(&self) -> Result<Complex64, RecursionError> {
        let prev = self.window[1];
        if prev.norm() == 0.0 {
            return Err(RecursionError::IndeterminateRatio {
                n: self.m - 1,
                z: format!("{}", self.z),
            });
        }
        Ok(self.window[0] / prev)
    }
}

fn check_off_pole_locus(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    z: Complex64,
) -> Result<(), RecursionError> {
    // z is a dyadic complex number, so the membership test is exact.
    let zg = GaussRat::from_complex64_exact(z);
    if def.p_k().eval(&zg).is_zero() {
        return Err(RecursionError::PoleLocusPoint {
            z: format!("{z}"),
        });
    }
    for e in init.entries() {
        if e.den().eval(&zg).is_zero() {
            return Err(RecursionError::PoleLocusPoint {
                z: format!("{z}"),
            });
        }
    }
    Ok(())
}

/// `r_n(z)` by normalized vector iteration.
pub fn eval_ratio(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    z: Complex64,
    n: usize,
) -> Result<Complex64, RecursionError> {
    let k = def.k();
    assert!(n >= 1, "r_n is defined for n >= 1");
    if n < k {
        check_off_pole_locus(def, init, z)?;
        let den = init.entry(n - 1).eval(z);
        if den.norm() == 0.0 {
            return Err(RecursionError::IndeterminateRatio {
                n: n - 1,
                z: format!("{z}"),
            });
        }
        return Ok(init.entry(n).eval(z) / den);
    }
    let mut state = RatioIterState::new(def, init, z)?;
    while state.m() < n {
        state.step();
    }
    state.ratio()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algfun::{parse_defining, parse_initial};

    fn quad() -> DefiningPolynomial {
        parse_defining("y^2 - y - z").unwrap()
    }

    fn ones() -> InitialTuple {
        parse_initial("1, 1").unwrap()
    }

    #[test]
    fn integer_iteration_at_z_six() {
        // q_n = q_{n−1} + 6·q_{n−2}: 1, 1, 7, 13, 55, 133, 463
        let seq = generate_exact(&quad(), &ones(), 6).unwrap();
        let expected = [1i64, 1, 7, 13, 55, 133, 463];
        let six = GaussRat::from_integer(6);
        for (n, want) in expected.iter().enumerate() {
            let got = seq.q(n).eval_exact(&six).unwrap();
            assert_eq!(got, GaussRat::from_integer(*want), "q_{n}(6)");
        }
    }

    #[test]
    fn k_one_gives_powers_of_z() {
        let def = parse_defining("y - z").unwrap();
        let init = parse_initial("1").unwrap();
        let seq = generate_exact(&def, &init, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(seq.numerator(n), &Poly::monomial(GaussRat::one(), n));
        }
    }

    #[test]
    fn ratio_function_examples() {
        let seq = generate_exact(&quad(), &ones(), 4).unwrap();
        let r2 = seq.ratio_function(2).unwrap();
        assert_eq!(r2.num(), &Poly::from_i64(&[1, 1]));
        assert_eq!(r2.den(), &Poly::one());

        let init = parse_initial("1, -1").unwrap();
        let seq = generate_exact(&quad(), &init, 4).unwrap();
        let r2 = seq.ratio_function(2).unwrap();
        // q_2 = −1 + z, so r_2 = (z−1)/(−1) = 1 − z
        assert_eq!(r2.num(), &Poly::from_i64(&[1, -1]));
        assert_eq!(r2.den(), &Poly::one());
    }

    #[test]
    fn eval_ratio_matches_integers_and_converges() {
        let z = Complex64::new(6.0, 0.0);
        let r6 = eval_ratio(&quad(), &ones(), z, 6).unwrap();
        assert!((r6 - Complex64::new(463.0 / 133.0, 0.0)).norm() < 1e-12);

        // brute-force integer oracle: u_n = u_{n−1} + 6·u_{n−2}
        let mut u: (i128, i128) = (1, 1);
        for _ in 2..=40 {
            u = (u.1, u.1 + 6 * u.0);
        }
        let r40_exact = u.1 as f64 / u.0 as f64;
        let r40 = eval_ratio(&quad(), &ones(), z, 40).unwrap();
        assert!((r40 - Complex64::new(r40_exact, 0.0)).norm() < 1e-12);
        // |r_40 − 3| = (10/3)·(2/3)^39 ≈ 4.6e−7
        assert!((r40 - Complex64::new(3.0, 0.0)).norm() < 1e-6);
        assert!((r40_exact - 3.0).abs() < 1e-6);
    }

    #[test]
    fn k_one_ratio_is_constant_in_n() {
        let def = parse_defining("y - z").unwrap();
        let init = parse_initial("1").unwrap();
        for n in [1usize, 2, 7, 30] {
            let z = Complex64::new(0.3, -1.2);
            let r = eval_ratio(&def, &init, z, n).unwrap();
            assert!((r - z).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_and_numeric_agree() {
        let init = parse_initial("1, -1").unwrap();
        let seq = generate_exact(&quad(), &init, 25).unwrap();
        let z = Complex64::new(0.7, 0.4);
        for n in 2..=25 {
            let exact = seq.ratio_function(n).unwrap().eval(z);
            let numeric = eval_ratio(&quad(), &init, z, n).unwrap();
            assert!(
                (exact - numeric).norm() <= 1e-9 * (1.0 + exact.norm()),
                "n = {n}: {exact} vs {numeric}"
            );
        }
    }

    #[test]
    fn cleared_recursion_residual_is_exactly_zero() {
        let init = parse_initial("z, 1/(z-I)").unwrap();
        let seq = generate_exact(&quad(), &init, 12).unwrap();
        let k = quad().k();
        let pk = quad().p_k().clone();
        for n in k..=12 {
            let mut acc: Poly<GaussRat> = seq.numerator(n).clone();
            let mut pw: Poly<GaussRat> = Poly::one();
            for i in 1..=k {
                acc = acc.add(&quad().p(k - i).mul(&pw).mul(seq.numerator(n - i)));
                pw = pw.mul(&pk);
            }
            assert!(acc.is_zero(), "residual nonzero at n = {n}");
        }
    }

    #[test]
    fn init_length_mismatch_detected() {
        let init = parse_initial("1").unwrap();
        assert!(matches!(
            generate_exact(&quad(), &init, 5),
            Err(RecursionError::InitLengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn pole_locus_point_rejected() {
        let def = parse_defining("(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)").unwrap();
        let init = InitialTuple::standard(3);
        let r = eval_ratio(&def, &init, Complex64::new(-1.0, 0.0), 10);
        assert!(matches!(r, Err(RecursionError::PoleLocusPoint { .. })));
    }

    #[test]
    fn indeterminate_ratio_reported() {
        // init {1, −1}: q_2 = z − 1 vanishes at z = 1, so r_3(1) is 0/0
        let init = parse_initial("1, -1").unwrap();
        let r = eval_ratio(&quad(), &init, Complex64::new(1.0, 0.0), 3);
        assert!(matches!(r, Err(RecursionError::IndeterminateRatio { n: 2, .. })));
    }

    #[test]
    fn rational_init_prefactor_cancels_in_ratio() {
        let init_poly = parse_initial("1, 2").unwrap();
        let init_rat = parse_initial("1/(z-I), 2/(z-I)").unwrap();
        let a = generate_exact(&quad(), &init_poly, 10).unwrap();
        let b = generate_exact(&quad(), &init_rat, 10).unwrap();
        for n in 2..=10 {
            assert_eq!(
                a.ratio_function(n).unwrap(),
                b.ratio_function(n).unwrap(),
                "ratio differs at n = {n}"
            );
        }
    }
}
