//! Simultaneous polynomial root finding (Aberth–Ehrlich) with Newton
//! polishing and multiplicity detection by cluster merging.

use crate::error::NumError;
use crate::poly::Poly;
use crate::scalar::{Complex64, GaussRat};

#[derive(Clone, Copy, Debug)]
pub struct RootConfig {
    pub max_iter: u32,
    /// Relative step tolerance for declaring an iterate converged.
    pub tol: f64,
    /// Roots closer than `cluster_radius·(1+|root|)` merge into one root
    /// with multiplicity.
    pub cluster_radius: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            max_iter: 200,
            tol: 1e-13,
            cluster_radius: 1e-7,
        }
    }
}

/// All roots of `p`, with multiplicities summing to `deg p`.
///
/// Output is sorted by descending modulus, ties by ascending argument, so
/// repeated runs emit identical lists.
pub fn poly_roots(
    p: &Poly<Complex64>,
    cfg: &RootConfig,
) -> Result<Vec<(Complex64, usize)>, NumError> {
    let deg = match p.degree() {
        None | Some(0) => return Err(NumError::DegreeZero),
        Some(d) => d,
    };
    // Strip exact zero roots first: they are common (monomial factors) and
    // free to peel off.
    let mut coeffs = p.coeffs().to_vec();
    let mut zero_mult = 0usize;
    while coeffs.first().is_some_and(|c| c.norm() == 0.0) {
        coeffs.remove(0);
        zero_mult += 1;
    }
    let mut found = Vec::with_capacity(deg);
    if coeffs.len() > 1 {
        let reduced = Poly::new(coeffs);
        found = aberth(&reduced, cfg)?;
    }
    let mut clustered = cluster_roots(&found, cfg.cluster_radius);
    if clustered.len() > 1 {
        merge_multiple_roots(p, &mut clustered);
    }
    // A simple root is polished on p itself; an m-fold root is a simple,
    // well-conditioned root of p^(m−1), so polish it there.
    for (root, mult) in clustered.iter_mut() {
        let mut q = p.clone();
        for _ in 1..*mult {
            q = q.derivative();
        }
        *root = newton_polish(&q, *root, 3);
    }
    if zero_mult > 0 {
        clustered.push((Complex64::new(0.0, 0.0), zero_mult));
    }
    clustered.sort_by(|a, b| {
        b.0.norm()
            .partial_cmp(&a.0.norm())
            .unwrap()
            .then(a.0.arg().partial_cmp(&b.0.arg()).unwrap())
    });
    debug_assert_eq!(clustered.iter().map(|r| r.1).sum::<usize>(), deg);
    Ok(clustered)
}

/// Float roots of an exact polynomial (exact coefficients are converted
/// first; there is no exact root extraction).
pub fn poly_roots_exact(
    p: &Poly<GaussRat>,
    cfg: &RootConfig,
) -> Result<Vec<(Complex64, usize)>, NumError> {
    poly_roots(&p.to_float(), cfg)
}

/// Fujiwara's root bound: `2·max((|a_{n−i}|/|a_n|)^{1/i})` with the
/// constant term halved. Far sharper than the Cauchy bound when the
/// coefficients span many orders of magnitude.
fn fujiwara_bound(p: &Poly<Complex64>) -> f64 {
    let deg = p.degree().unwrap();
    let an = p.leading_coeff().unwrap().norm();
    let mut best = 0.0_f64;
    for i in 1..=deg {
        let mut ratio = p.coeff(deg - i).norm() / an;
        if i == deg {
            ratio /= 2.0;
        }
        if ratio > 0.0 {
            best = best.max(ratio.powf(1.0 / i as f64));
        }
    }
    (2.0 * best).max(1e-3)
}

fn aberth(p: &Poly<Complex64>, cfg: &RootConfig) -> Result<Vec<Complex64>, NumError> {
    // normalize so the largest coefficient has unit modulus, keeping
    // evaluation magnitudes inside f64 range
    let inv_scale = Complex64::new(1.0 / p.coeff_scale(), 0.0);
    let p = p.scale(&inv_scale);
    let deg = p.degree().unwrap();
    let dp = p.derivative();
    // no root lies outside this circle; reflecting runaway iterates back
    // onto it keeps every evaluation finite
    let cap = 2.0 * fujiwara_bound(&p);
    let mut xs = initial_guesses(&p);
    for x in xs.iter_mut() {
        if x.norm() > cap {
            *x = Complex64::from_polar(cap, x.arg());
        }
    }

    // Convergence is re-tested every sweep rather than latched: a root that
    // settles early may still be displaced when a clustered neighbor moves.
    for _ in 0..cfg.max_iter {
        let mut all_done = true;
        for i in 0..deg {
            let x = xs[i];
            let pv = p.eval(&x);
            // Backward-error stop: |p(x)| at the noise floor of evaluation.
            let local_scale: f64 = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| c.norm() * x.norm().powi(j as i32))
                .sum();
            if pv.norm() <= 8.0 * f64::EPSILON * local_scale {
                continue;
            }
            let dv = dp.eval(&x);
            let newton = if dv.norm() == 0.0 {
                Complex64::new(cfg.tol.sqrt(), cfg.tol.sqrt())
            } else {
                pv / dv
            };
            let mut repulse = Complex64::new(0.0, 0.0);
            for (j, xj) in xs.iter().enumerate() {
                if j != i {
                    let d = x - xj;
                    if d.norm() > 0.0 {
                        repulse += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulse;
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            let next = x - step;
            if !next.re.is_finite() || !next.im.is_finite() || next.norm() > cap {
                // Aberth kicks a crowded iterate far out occasionally;
                // re-enter on the bounding circle at a rotated angle
                xs[i] = Complex64::from_polar(cap, x.arg() + 0.3);
                all_done = false;
                continue;
            }
            xs[i] = next;
            if step.norm() > cfg.tol * (1.0 + next.norm()) {
                all_done = false;
            }
        }
        if all_done {
            return Ok(xs);
        }
    }
    Err(NumError::NonConvergence {
        iterations: cfg.max_iter,
    })
}

/// Starting points from the Newton polygon of the coefficient moduli: the
/// upper convex hull of `(i, ln|a_i|)` splits the degree into annuli whose
/// radii estimate the root moduli, one batch of equally spaced guesses per
/// annulus.
fn initial_guesses(p: &Poly<Complex64>) -> Vec<Complex64> {
    let deg = p.degree().unwrap();
    let pts: Vec<(usize, f64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(i, c)| (i, c.norm().ln()))
        .collect();
    // upper convex hull, left to right
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(x, y) in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            let cross = (x2 as f64 - x1 as f64) * (y - y1) - (x as f64 - x1 as f64) * (y2 - y1);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    let mut guesses = Vec::with_capacity(deg);
    let mut batch = 0usize;
    for w in hull.windows(2) {
        let (i, vi) = w[0];
        let (j, vj) = w[1];
        let count = j - i;
        let radius = ((vi - vj) / count as f64).exp().clamp(1e-150, 1e150);
        for t in 0..count {
            let theta = 2.0 * std::f64::consts::PI * (t as f64) / (count as f64)
                + 0.437
                + 0.73 * batch as f64;
            guesses.push(Complex64::from_polar(radius, theta));
        }
        batch += 1;
    }
    // hull covers [first nonzero .. deg]; any zero-root slots were stripped
    // by the caller, so this fills exactly deg entries
    debug_assert_eq!(guesses.len(), deg);
    guesses
}

fn newton_polish(p: &Poly<Complex64>, mut x: Complex64, steps: usize) -> Complex64 {
    let dp = p.derivative();
    for _ in 0..steps {
        let dv = dp.eval(&x);
        if dv.norm() == 0.0 {
            break;
        }
        let step = p.eval(&x) / dv;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        let next = x - step;
        if (next - x).norm() > 0.5 * (1.0 + x.norm()) {
            break; // polish diverging, keep the Aberth value
        }
        x = next;
    }
    x
}

/// An m-fold root computed in floating point scatters its Aberth members at
/// a distance ~eps^(1/m), beyond any fixed clustering radius for m ≥ 3. A
/// merge of nearby clusters into an m-fold root is accepted only when every
/// derivative p^(j), j < m, vanishes at the joint centroid to within the
/// accuracy an exact m-fold root would force (|p^(j)| ≲ eps^((m−j)/m)).
fn merge_multiple_roots(p: &Poly<Complex64>, clusters: &mut Vec<(Complex64, usize)>) {
    const PAIR_GATE: f64 = 1e-4;
    const FUDGE: f64 = 1e3;
    let mut derivs: Vec<Poly<Complex64>> = vec![p.clone()];
    let eval_scale = |q: &Poly<Complex64>, x: Complex64| -> f64 {
        q.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| c.norm() * x.norm().powi(j as i32))
            .sum()
    };
    'outer: loop {
        let mut pairs: Vec<(usize, usize, f64)> = Vec::new();
        for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                let d = (clusters[i].0 - clusters[j].0).norm();
                let gate = PAIR_GATE * (1.0 + clusters[i].0.norm().min(clusters[j].0.norm()));
                if d <= gate {
                    pairs.push((i, j, d));
                }
            }
        }
        pairs.sort_by(|a, b| a.2.partial_cmp(&b.2).unwrap());
        for (i, j, _) in pairs {
            let (ci, mi) = clusters[i];
            let (cj, mj) = clusters[j];
            let m = mi + mj;
            let centroid = (ci * mi as f64 + cj * mj as f64) / m as f64;
            while derivs.len() < m {
                let next = derivs.last().unwrap().derivative();
                derivs.push(next);
            }
            let justified = (0..m).all(|jj| {
                let dv = derivs[jj].eval(&centroid).norm();
                let scale = eval_scale(&derivs[jj], centroid).max(1e-300);
                let frac = (m - jj) as f64 / m as f64;
                dv <= FUDGE * f64::EPSILON.powf(frac) * scale
            });
            if justified {
                clusters[j] = (centroid, m);
                clusters.remove(i);
                continue 'outer;
            }
        }
        return;
    }
}

/// Union-find merge of roots closer than `radius·(1+|root|)`; each cluster
/// becomes its centroid with the cluster size as multiplicity.
fn cluster_roots(roots: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let r = radius * (1.0 + roots[i].norm().min(roots[j].norm()));
            if (roots[i] - roots[j]).norm() <= r {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut clusters: std::collections::BTreeMap<usize, Vec<Complex64>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        clusters.entry(r).or_default().push(roots[i]);
    }
    clusters
        .into_values()
        .map(|members| {
            let m = members.len();
            let sum: Complex64 = members.iter().sum();
            (sum / m as f64, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_roots(
        got: &[(Complex64, usize)],
        want: &[(Complex64, usize)],
        tol: f64,
    ) {
        assert_eq!(got.len(), want.len(), "root counts differ: {got:?} vs {want:?}");
        for (r, m) in want {
            let hit = got
                .iter()
                .find(|(g, _)| (g - r).norm() <= tol)
                .unwrap_or_else(|| panic!("missing root {r} in {got:?}"));
            assert_eq!(hit.1, *m, "wrong multiplicity at {r}");
        }
    }

    #[test]
    fn quadratic_with_integer_roots() {
        // t² - t - 2 = (t-2)(t+1)
        let p = Poly::from_f64(&[-2.0, -1.0, 1.0]);
        let roots = poly_roots(&p, &RootConfig::default()).unwrap();
        assert_roots(
            &roots,
            &[
                (Complex64::new(2.0, 0.0), 1),
                (Complex64::new(-1.0, 0.0), 1),
            ],
            1e-12,
        );
    }

    #[test]
    fn triple_root_is_clustered() {
        // (t+1)³ = t³ + 3t² + 3t + 1
        let p = Poly::from_f64(&[1.0, 3.0, 3.0, 1.0]);
        let roots = poly_roots(&p, &RootConfig::default()).unwrap();
        assert_roots(&roots, &[(Complex64::new(-1.0, 0.0), 3)], 1e-6);
    }

    #[test]
    fn monomial_root_at_zero() {
        let p = Poly::from_f64(&[0.0, 1.0]);
        let roots = poly_roots(&p, &RootConfig::default()).unwrap();
        assert_roots(&roots, &[(Complex64::new(0.0, 0.0), 1)], 0.0);
    }

    #[test]
    fn constant_rejected() {
        let p = Poly::from_f64(&[3.0]);
        assert!(matches!(
            poly_roots(&p, &RootConfig::default()),
            Err(NumError::DegreeZero)
        ));
    }

    #[test]
    fn backward_error_bound_on_random_polynomials() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 4.0 - 2.0
        };
        for _ in 0..40 {
            let deg = 2 + (rnd().abs() * 10.0) as usize;
            let coeffs: Vec<Complex64> = (0..=deg)
                .map(|_| Complex64::new(rnd(), rnd()))
                .collect();
            let p = Poly::new(coeffs);
            if p.degree().map_or(true, |d| d < 1) {
                continue;
            }
            let roots = poly_roots(&p, &RootConfig::default()).unwrap();
            for (r, _) in &roots {
                let scale: f64 = p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c.norm() * r.norm().powi(j as i32))
                    .sum();
                assert!(
                    p.eval(r).norm() <= 1e-10 * scale.max(1e-300),
                    "backward error too large at {r}"
                );
            }
        }
    }
}
