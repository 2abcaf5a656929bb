//! Poles of the rational approximants: extraction, Laurent data,
//! classification against the locus sets, and reconstruction from the
//! residue data (the rational function is the Cauchy transform of its
//! residue distribution plus a polynomial part).

use crate::error::PolesError;
use crate::loci::{dist_to_polyline, LocusSet};
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::roots::{poly_roots, RootConfig};
use crate::scalar::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleClass {
    /// Near `Υ∖(Ξ∪Σ)`: a genuine pole of the approximated branch.
    Fixed,
    /// Near the equimodular curves: the regular part accumulating on `Ξ`.
    Regular,
    /// Near the set of slow growth `Σ`.
    Spurious,
    /// Farther than the classification radius from every locus.
    Unclassified,
}

#[derive(Clone, Debug)]
pub struct PoleData {
    pub location: Complex64,
    pub order: usize,
    /// `laurent[l−1]` is the coefficient of `(z−z_m)^{−l}`, `l = 1..order`;
    /// `laurent[0]` is the residue.
    pub laurent: Vec<Complex64>,
    pub class: PoleClass,
    /// Distance to the nearest locus (whatever its kind).
    pub locus_distance: f64,
}

#[derive(Clone, Debug)]
pub struct PoleReport {
    pub n: usize,
    pub poles: Vec<PoleData>,
    pub denominator_degree: usize,
    /// Quotient of the division `num/den`, so that `r` equals the
    /// polynomial part plus the principal parts at all poles.
    pub polynomial_part: Poly<Complex64>,
}

impl PoleReport {
    pub fn total_pole_order(&self) -> usize {
        self.poles.iter().map(|p| p.order).sum()
    }
}

/// Poles of a reduced rational function with Laurent principal parts.
///
/// Pole locations are the clustered denominator roots; for an order-m pole
/// the principal part is obtained by Taylor-dividing the remainder by the
/// deflated denominator at the pole.
pub fn poles_and_residues(
    r: &RatFun<Complex64>,
    n: usize,
    cfg: &RootConfig,
) -> Result<PoleReport, PolesError> {
    let num = r.num();
    let den = r.den();
    let den_deg = den.degree().unwrap_or(0);
    let (quot, rem) = num.div_rem(den);
    if den_deg == 0 {
        return Ok(PoleReport {
            n,
            poles: Vec::new(),
            denominator_degree: 0,
            polynomial_part: quot,
        });
    }
    let roots = poly_roots(den, cfg)?;
    let mut poles = Vec::with_capacity(roots.len());
    for (z0, order) in roots {
        // deflate den by (z − z0)^order, discarding the small remainders
        let mut h = den.clone();
        for _ in 0..order {
            h = synthetic_deflate(&h, z0);
        }
        let a = taylor_prefix(&rem, z0, order);
        let b = taylor_prefix(&h, z0, order);
        let c = series_divide(&a, &b, order);
        // c_j is the coefficient of (z−z0)^(j−order): A_l = c_{order−l}
        let laurent: Vec<Complex64> = (1..=order).map(|l| c[order - l]).collect();
        poles.push(PoleData {
            location: z0,
            order,
            laurent,
            class: PoleClass::Unclassified,
            locus_distance: f64::INFINITY,
        });
    }
    poles.sort_by(|a, b| {
        a.location
            .re
            .total_cmp(&b.location.re)
            .then(a.location.im.total_cmp(&b.location.im))
    });
    Ok(PoleReport {
        n,
        poles,
        denominator_degree: den_deg,
        polynomial_part: quot,
    })
}

/// One synthetic-division step: `p/(z − z0)` with the remainder dropped.
fn synthetic_deflate(p: &Poly<Complex64>, z0: Complex64) -> Poly<Complex64> {
    let cs = p.coeffs();
    if cs.len() <= 1 {
        return Poly::zero();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); cs.len() - 1];
    let mut acc = Complex64::new(0.0, 0.0);
    for i in (0..cs.len() - 1).rev() {
        acc = cs[i + 1] + acc * z0;
        out[i] = acc;
    }
    Poly::new(out)
}

/// First `m` Taylor coefficients of `p` at `z0` (Horner shift).
fn taylor_prefix(p: &Poly<Complex64>, z0: Complex64, m: usize) -> Vec<Complex64> {
    let mut rem = p.clone();
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(rem.eval(&z0));
        rem = synthetic_deflate(&rem, z0);
    }
    out
}

/// `a(t)/b(t) mod t^m` with `b(0) ≠ 0`.
fn series_divide(a: &[Complex64], b: &[Complex64], m: usize) -> Vec<Complex64> {
    let b0 = b[0];
    let mut c = vec![Complex64::new(0.0, 0.0); m];
    for j in 0..m {
        let mut acc = if j < a.len() {
            a[j]
        } else {
            Complex64::new(0.0, 0.0)
        };
        for i in 0..j {
            let bk = if j - i < b.len() {
                b[j - i]
            } else {
                Complex64::new(0.0, 0.0)
            };
            acc -= c[i] * bk;
        }
        c[j] = acc / b0;
    }
    c
}

/// Tags each pole with the nearest locus within `eps`: `Υ∖(Ξ∪Σ)` → Fixed,
/// `Ξ` → Regular, `Σ` → Spurious; nearest wins, others stay Unclassified.
pub fn classify_poles(mut report: PoleReport, loci: &LocusSet, eps: f64) -> PoleReport {
    let dist_to_xi = |z: Complex64| -> f64 {
        let seg = loci
            .xi_segments
            .iter()
            .map(|s| dist_to_polyline(z, s))
            .fold(f64::INFINITY, f64::min);
        let iso = loci
            .xi_isolated
            .iter()
            .map(|p| (z - p).norm())
            .fold(f64::INFINITY, f64::min);
        seg.min(iso)
    };
    let dist_to_sigma = |z: Complex64| -> f64 {
        loci.sigma
            .iter()
            .map(|(p, _)| (z - p).norm())
            .fold(f64::INFINITY, f64::min)
    };
    // Υ points sitting inside Ξ or Σ neighborhoods do not anchor Fixed poles
    let fixed_anchors: Vec<Complex64> = loci
        .upsilon
        .iter()
        .copied()
        .filter(|u| dist_to_xi(*u) > eps && dist_to_sigma(*u) > eps)
        .collect();
    for pole in report.poles.iter_mut() {
        let z = pole.location;
        let d_fixed = fixed_anchors
            .iter()
            .map(|u| (z - u).norm())
            .fold(f64::INFINITY, f64::min);
        let d_reg = dist_to_xi(z);
        let d_spur = dist_to_sigma(z);
        let (best, class) = [
            (d_fixed, PoleClass::Fixed),
            (d_reg, PoleClass::Regular),
            (d_spur, PoleClass::Spurious),
        ]
        .into_iter()
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .unwrap();
        pole.locus_distance = best;
        pole.class = if best <= eps {
            class
        } else {
            PoleClass::Unclassified
        };
    }
    report
}

/// Total order of the spurious poles.
pub fn spurious_count(report: &PoleReport) -> usize {
    report
        .poles
        .iter()
        .filter(|p| p.class == PoleClass::Spurious)
        .map(|p| p.order)
        .sum()
}

/// Rebuilds `r` as polynomial part plus principal parts and returns the
/// largest relative evaluation residual over 20 probe points placed away
/// from every pole.
pub fn cauchy_reconstruct(report: &PoleReport, r: &RatFun<Complex64>) -> Result<f64, PolesError> {
    let max_pole = report
        .poles
        .iter()
        .map(|p| p.location.norm())
        .fold(0.0_f64, f64::max);
    let radius = 2.0 * (1.0 + max_pole);
    let min_sep = 0.05 * radius;
    let n_probes = 20;
    let mut offset = 0.137;
    let mut attempts = 0u32;
    let probes: Vec<Complex64> = loop {
        attempts += 1;
        let candidate: Vec<Complex64> = (0..n_probes)
            .map(|j| {
                Complex64::from_polar(
                    radius,
                    2.0 * std::f64::consts::PI * j as f64 / n_probes as f64 + offset,
                )
            })
            .collect();
        let ok = candidate.iter().all(|p| {
            report
                .poles
                .iter()
                .all(|pole| (p - pole.location).norm() >= min_sep)
        });
        if ok {
            break candidate;
        }
        if attempts >= 5 {
            return Err(PolesError::ProbeTooClose { attempts });
        }
        offset += 0.31;
    };
    let mut worst = 0.0_f64;
    for p in probes {
        let direct = r.eval(p);
        let mut recon = report.polynomial_part.eval(&p);
        for pole in &report.poles {
            let d = p - pole.location;
            for (idx, a) in pole.laurent.iter().enumerate() {
                recon += a / d.powi(idx as i32 + 1);
            }
        }
        let resid = (direct - recon).norm() / (1.0 + direct.norm());
        worst = worst.max(resid);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algfun::{parse_defining, parse_initial};
    use crate::loci::Window;
    use crate::recursion::generate_exact;

    fn float_rat(num: &[f64], den: &[f64]) -> RatFun<Complex64> {
        RatFun::from_parts_float(Poly::from_f64(num), Poly::from_f64(den))
    }

    #[test]
    fn simple_pole_residue() {
        // 1/(z−2)
        let r = float_rat(&[1.0], &[-2.0, 1.0]);
        let report = poles_and_residues(&r, 0, &RootConfig::default()).unwrap();
        assert_eq!(report.poles.len(), 1);
        let p = &report.poles[0];
        assert!((p.location - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        assert_eq!(p.order, 1);
        assert!((p.laurent[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(cauchy_reconstruct(&report, &r).unwrap() < 1e-12);
    }

    #[test]
    fn double_pole_laurent_data() {
        // (z+1)/(z−i)² = (i+1)/(z−i)² + 1/(z−i)
        let den = {
            let lin = Poly::new(vec![Complex64::new(0.0, -1.0), Complex64::new(1.0, 0.0)]);
            lin.mul(&lin)
        };
        let r = RatFun::from_parts_float(Poly::from_f64(&[1.0, 1.0]), den);
        let report = poles_and_residues(&r, 0, &RootConfig::default()).unwrap();
        assert_eq!(report.poles.len(), 1);
        let p = &report.poles[0];
        assert_eq!(p.order, 2);
        assert!((p.location - Complex64::new(0.0, 1.0)).norm() < 1e-7);
        assert!((p.laurent[1] - Complex64::new(1.0, 1.0)).norm() < 1e-6, "A_2 = i+1");
        assert!((p.laurent[0] - Complex64::new(1.0, 0.0)).norm() < 1e-6, "A_1 = 1");
        assert!(cauchy_reconstruct(&report, &r).unwrap() < 1e-8);
    }

    #[test]
    fn polynomial_ratio_has_no_poles() {
        let def = parse_defining("y^2 - y - z").unwrap();
        let init = parse_initial("1, -1").unwrap();
        let seq = generate_exact(&def, &init, 3).unwrap();
        let r2 = seq.ratio_function(2).unwrap().to_float();
        let report = poles_and_residues(&r2, 2, &RootConfig::default()).unwrap();
        assert!(report.poles.is_empty());
        assert!(cauchy_reconstruct(&report, &r2).unwrap() < 1e-12);
    }

    #[test]
    fn sum_of_orders_matches_denominator_degree() {
        // (z²+1)/((z−1)²(z+3))
        let den = Poly::from_f64(&[-1.0, 1.0])
            .mul(&Poly::from_f64(&[-1.0, 1.0]))
            .mul(&Poly::from_f64(&[3.0, 1.0]));
        let r = RatFun::from_parts_float(Poly::from_f64(&[1.0, 0.0, 1.0]), den);
        let report = poles_and_residues(&r, 0, &RootConfig::default()).unwrap();
        assert_eq!(report.total_pole_order(), report.denominator_degree);
        assert_eq!(report.denominator_degree, 3);
        assert!(cauchy_reconstruct(&report, &r).unwrap() < 1e-9);
    }

    #[test]
    fn nearest_locus_rule() {
        let loci = LocusSet {
            xi_segments: vec![vec![
                Complex64::new(-2.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ]],
            xi_isolated: vec![],
            upsilon: vec![Complex64::new(3.0, 0.0)],
            delta_t: vec![],
            candidates_s: vec![(Complex64::new(0.0, 2.0), 1)],
            sigma: vec![(Complex64::new(0.0, 2.0), 1)],
            sigma_rejected_nondominant: vec![],
            window: Window::new(-3.0, 3.0, -3.0, 3.0).unwrap(),
            cell: (0.05, 0.05),
            warnings: vec![],
        };
        let mk = |z: Complex64| PoleData {
            location: z,
            order: 1,
            laurent: vec![Complex64::new(1.0, 0.0)],
            class: PoleClass::Unclassified,
            locus_distance: f64::INFINITY,
        };
        let report = PoleReport {
            n: 7,
            poles: vec![
                mk(Complex64::new(3.01, 0.0)),   // near upsilon
                mk(Complex64::new(-1.5, 0.02)),  // near xi
                mk(Complex64::new(0.01, 2.0)),   // near sigma
                mk(Complex64::new(1.5, -1.5)),   // far from everything
            ],
            denominator_degree: 4,
            polynomial_part: Poly::zero(),
        };
        let classified = classify_poles(report, &loci, 0.1);
        assert_eq!(classified.poles.len(), 4);
        let classes: Vec<PoleClass> = classified.poles.iter().map(|p| p.class).collect();
        assert!(classes.contains(&PoleClass::Fixed));
        assert!(classes.contains(&PoleClass::Regular));
        assert!(classes.contains(&PoleClass::Spurious));
        assert!(classes.contains(&PoleClass::Unclassified));
        assert_eq!(spurious_count(&classified), 1);
    }
}
