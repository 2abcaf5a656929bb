//! Pointwise spectral analysis of the symbol equation.
//!
//! At a fixed `z` with `P_k(z) ≠ 0` the recursion becomes constant-
//! coefficient; its characteristic ("symbol") polynomial is
//! `χ(ζ) = ζ^k − Σ R_{k−i−1}(z)·ζ^{k−i−1} = P(ζ, z)/P_k(z)`. The roots are
//! the spectral numbers; a point is dominant when a unique simple root
//! strictly exceeds the rest in modulus.

use crate::algfun::{DefiningPolynomial, InitialTuple};
use crate::error::SpectrumError;
use crate::poly::Poly;
use crate::roots::{poly_roots, RootConfig};
use crate::scalar::{Complex64, GaussRat, Ring};

pub const DEFAULT_DOMINANCE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceClass {
    Dominant,
    /// Max-modulus roots tie, but one has strictly largest multiplicity;
    /// whether the ratios still converge depends on the initial tuple.
    SubdominantCapable,
    Nondominant,
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub z: Complex64,
    /// Spectral numbers with multiplicities, sorted by descending modulus;
    /// multiplicities sum to k.
    pub taus: Vec<(Complex64, usize)>,
    pub class: DominanceClass,
    pub y_dom: Option<Complex64>,
    /// `|τ_(2)/τ_(1)|` at dominant points: the geometric factor governing
    /// the convergence of `r_n`.
    pub theoretical_rate: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct EigenPair {
    /// Right eigenvector `u_i = λ^{k−i}` of the companion matrix.
    pub u: Vec<Complex64>,
    /// Left eigenvector, rescaled so that `v·u = 1`.
    pub v: Vec<Complex64>,
    pub lambda: Complex64,
}

fn ensure_off_pk_zero(def: &DefiningPolynomial, z: Complex64) -> Result<Complex64, SpectrumError> {
    let zg = GaussRat::from_complex64_exact(z);
    if def.p_k().eval(&zg).is_zero() {
        return Err(SpectrumError::PoleOfCoefficients {
            z: format!("{z}"),
        });
    }
    let v = def.p_k().eval_complex(z);
    if v.norm() == 0.0 {
        // exactly nonzero but below float underflow
        return Err(SpectrumError::PoleOfCoefficients {
            z: format!("{z}"),
        });
    }
    Ok(v)
}

/// Companion matrix `T(z)`: first row `(R_{k−1}, …, R_0)`, ones on the
/// subdiagonal.
pub fn companion(
    def: &DefiningPolynomial,
    z: Complex64,
) -> Result<Vec<Vec<Complex64>>, SpectrumError> {
    let pk = ensure_off_pk_zero(def, z)?;
    let k = def.k();
    let mut mat = vec![vec![Complex64::new(0.0, 0.0); k]; k];
    for (col, row0) in mat[0].iter_mut().enumerate() {
        let i = k - 1 - col;
        *row0 = -def.p(i).eval_complex(z) / pk;
    }
    for r in 1..k {
        mat[r][r - 1] = Complex64::new(1.0, 0.0);
    }
    Ok(mat)
}

/// Monic symbol polynomial `χ(ζ, z)` at a point, ascending coefficients.
pub fn symbol_poly_at(
    def: &DefiningPolynomial,
    z: Complex64,
) -> Result<Poly<Complex64>, SpectrumError> {
    let pk = ensure_off_pk_zero(def, z)?;
    Ok(symbol_from_values(
        &def.coeffs()
            .iter()
            .map(|p| p.eval_complex(z))
            .collect::<Vec<_>>(),
        pk,
    ))
}

fn symbol_from_values(p_values: &[Complex64], pk: Complex64) -> Poly<Complex64> {
    let k = p_values.len() - 1;
    let mut coeffs: Vec<Complex64> = p_values[..k].iter().map(|v| v / pk).collect();
    coeffs.push(Complex64::new(1.0, 0.0));
    Poly::new(coeffs)
}

/// Spectral numbers at `z` with dominance classification.
///
/// Two moduli tie when their gap is at most `tol` times the larger one;
/// points with a tie among distinct roots fall to `Nondominant` unless a
/// unique root has strictly largest multiplicity (`SubdominantCapable`).
pub fn spectral_numbers(
    def: &DefiningPolynomial,
    z: Complex64,
    tol: f64,
) -> Result<SpectrumReport, SpectrumError> {
    let chi = symbol_poly_at(def, z)?;
    let taus = poly_roots(&chi, &RootConfig::default())?;
    Ok(classify(z, taus, tol))
}

pub fn classify(z: Complex64, taus: Vec<(Complex64, usize)>, tol: f64) -> SpectrumReport {
    let m1 = taus[0].0.norm();
    let tied: Vec<&(Complex64, usize)> = taus
        .iter()
        .filter(|(t, _)| m1 - t.norm() <= tol * m1)
        .collect();
    let (class, y_dom) = if tied.len() == 1 {
        if tied[0].1 == 1 {
            (DominanceClass::Dominant, Some(tied[0].0))
        } else {
            // a unique but multiple max-modulus root is not dominant
            (DominanceClass::Nondominant, None)
        }
    } else {
        let top_mult = tied.iter().map(|(_, m)| *m).max().unwrap();
        let with_top: Vec<_> = tied.iter().filter(|(_, m)| *m == top_mult).collect();
        if with_top.len() == 1 && tied.iter().any(|(_, m)| *m < top_mult) {
            (DominanceClass::SubdominantCapable, Some(with_top[0].0))
        } else {
            (DominanceClass::Nondominant, None)
        }
    };
    let theoretical_rate = if class == DominanceClass::Dominant {
        Some(if taus.len() > 1 {
            taus[1].0.norm() / m1
        } else {
            0.0
        })
    } else {
        None
    };
    SpectrumReport {
        z,
        taus,
        class,
        y_dom,
        theoretical_rate,
    }
}

/// The unique max-modulus simple root at a dominant point.
pub fn dominant_root(
    def: &DefiningPolynomial,
    z: Complex64,
    tol: f64,
) -> Result<Complex64, SpectrumError> {
    let report = spectral_numbers(def, z, tol)?;
    match (report.class, report.y_dom) {
        (DominanceClass::Dominant, Some(y)) => Ok(y),
        _ => Err(SpectrumError::NotDominantPoint {
            report: Box::new(report),
        }),
    }
}

/// Closed-form eigenvectors of `T(z)` and `T(z)ᵗ` for the dominant
/// eigenvalue: `u_i = λ^{k−i}`, `v_i = Σ_{j≥i} R_{k−j}·λ^{i−j}`, jointly
/// normalized to `v·u = 1`. Before normalization `v·u = λ·χ′(λ)`, which is
/// verified numerically.
pub fn eigen_uv(
    def: &DefiningPolynomial,
    z: Complex64,
    tol: f64,
) -> Result<EigenPair, SpectrumError> {
    let lambda = dominant_root(def, z, tol)?;
    let (u, v_raw, s) = eigen_raw(def, z, lambda)?;
    let chi = symbol_poly_at(def, z)?;
    let expected = lambda * chi.derivative().eval(&lambda);
    debug_assert!(
        (s - expected).norm() <= 1e-8 * (1.0 + s.norm() + expected.norm()),
        "v·u = {s} but λ·χ'(λ) = {expected}"
    );
    if s.norm() == 0.0 {
        return Err(SpectrumError::NotDominantPoint {
            report: Box::new(spectral_numbers(def, z, tol)?),
        });
    }
    let v = v_raw.into_iter().map(|c| c / s).collect();
    Ok(EigenPair { u, v, lambda })
}

/// Unnormalized `u`, `v` and the pairing `s = v·u`.
fn eigen_raw(
    def: &DefiningPolynomial,
    z: Complex64,
    lambda: Complex64,
) -> Result<(Vec<Complex64>, Vec<Complex64>, Complex64), SpectrumError> {
    let pk = ensure_off_pk_zero(def, z)?;
    let k = def.k();
    let r_val = |j: usize| -def.p(j).eval_complex(z) / pk; // R_j(z)
    let u: Vec<Complex64> = (1..=k).map(|i| lambda.powi((k - i) as i32)).collect();
    let v: Vec<Complex64> = (1..=k)
        .map(|i| {
            (i..=k)
                .map(|j| r_val(k - j) * lambda.powi(i as i32 - j as i32))
                .sum()
        })
        .collect();
    let s: Complex64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
    Ok((u, v, s))
}

/// The limit `g(z) = lim q_n(z)/λ(z)^n`, the coefficient of the initial
/// tuple on the dominant eigendirection. Since `u_1·λ^{1−k} = 1`, it equals
/// `Σ_i v_i(z)·q_{k−i}(z)` with `v·u = 1`: zero exactly at points of slow
/// growth.
pub fn limit_g(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    z: Complex64,
    tol: f64,
) -> Result<Complex64, SpectrumError> {
    let k = def.k();
    // pole-locus membership is exact at a dyadic z
    let zg = GaussRat::from_complex64_exact(z);
    for e in init.entries() {
        if e.den().eval(&zg).is_zero() {
            return Err(SpectrumError::PoleLocusPoint {
                z: format!("{z}"),
            });
        }
    }
    let lambda = dominant_root(def, z, tol)?;
    let (_, v_raw, s) = eigen_raw(def, z, lambda)?;
    if s.norm() == 0.0 {
        return Err(SpectrumError::NotDominantPoint {
            report: Box::new(spectral_numbers(def, z, tol)?),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 1..=k {
        acc += v_raw[i - 1] * init.entry(k - i).eval(z);
    }
    Ok(acc / s)
}

/// The slow-growth criterion value `Σ_{i≤j} λ^{i−j}·q_{k−i}·R_{k−j}` and its
/// natural magnitude scale, for a caller-supplied λ.
pub fn slow_growth_criterion(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    z: Complex64,
    lambda: Complex64,
) -> (Complex64, f64) {
    let k = def.k();
    let pk = def.p_k().eval_complex(z);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut scale = 0.0_f64;
    for i in 1..=k {
        let qi = init.entry(k - i).eval(z);
        for j in i..=k {
            let r = -def.p(k - j).eval_complex(z) / pk;
            let term = lambda.powi(i as i32 - j as i32) * qi * r;
            acc += term;
            scale += term.norm();
        }
    }
    (acc, scale)
}
