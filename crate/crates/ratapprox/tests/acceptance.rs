//! Acceptance suite: one test per acceptance criterion, each printing a
//! PASS line with its timing. Run with
//! `cargo test -p ratapprox --test acceptance -- --nocapture`.

use ratapprox::algfun::{parse_defining, parse_initial, DefiningPolynomial, InitialTuple};
use ratapprox::experiments::{self, fit_geometric_rate};
use ratapprox::loci::{self, LociConfig, LocusSet, Window};
use ratapprox::poles;
use ratapprox::poly::Poly;
use ratapprox::recursion::{eval_ratio, generate_exact};
use ratapprox::roots::RootConfig;
use ratapprox::scalar::{Complex64, GaussRat, Ring};
use ratapprox::spectrum;
use std::time::Instant;

fn quad() -> DefiningPolynomial {
    parse_defining("y^2 - y - z").unwrap()
}

fn fig1() -> DefiningPolynomial {
    parse_defining("(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)").unwrap()
}

fn fig1_alt_init() -> InitialTuple {
    parse_initial("z^5+I*z^2-5, z^3-z+I, 1").unwrap()
}

fn pass(criterion: &str, started: Instant) {
    println!(
        "[acceptance] {criterion}: PASS ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
}

/// Deterministic pseudo-random stream for sample points.
struct Lcg(u64);

impl Lcg {
    fn next_f64(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((self.0 >> 11) as f64) / ((1u64 << 53) as f64)
    }

    fn complex_in(&mut self, half: f64) -> Complex64 {
        Complex64::new(
            (self.next_f64() * 2.0 - 1.0) * half,
            (self.next_f64() * 2.0 - 1.0) * half,
        )
    }
}

#[test]
fn criterion_01_convergence_rate() {
    let t0 = Instant::now();
    let def = quad();
    let init = parse_initial("1, 1").unwrap();
    let z = Complex64::new(6.0, 0.0);
    let y = Complex64::new(3.0, 0.0);
    // |r_n − 3| = 5·(2/3)^n·(1+o(1)), so M = 6 bounds the range used
    let mut samples = Vec::new();
    for n in 10..=40 {
        let err = (eval_ratio(&def, &init, z, n).unwrap() - y).norm();
        assert!(
            err <= 6.0 * (2.0f64 / 3.0).powi(n as i32),
            "geometric envelope violated at n = {n}: {err}"
        );
        samples.push((n, err));
    }
    let fitted = fit_geometric_rate(&samples).expect("enough samples");
    let target = 2.0 / 3.0;
    assert!(
        (fitted - target).abs() <= 0.10 * target,
        "fitted rate {fitted} deviates more than 10% from 2/3"
    );
    assert!(t0.elapsed().as_secs_f64() < 1.0, "budget exceeded");
    pass("criterion 1 (convergence rate at z = 6)", t0);
}

#[test]
fn criterion_02_equimodular_segment() {
    let t0 = Instant::now();
    let def = quad();
    let window = Window::new(-3.0, 1.0, -1.0, 1.0).unwrap();
    let cfg = LociConfig::default();
    let trace = loci::trace_equimodular(&def, window, (256, 256), &cfg).unwrap();
    let (cw, ch) = trace.cell;
    let tol = 2.0 * cw.hypot(ch);
    let all: Vec<Complex64> = trace
        .segments
        .iter()
        .flatten()
        .copied()
        .chain(trace.isolated.iter().copied())
        .collect();
    assert!(!all.is_empty(), "nothing traced");
    // one-sided Hausdorff: every traced point lies near the true ray
    for p in &all {
        assert!(p.im.abs() <= tol, "traced point off the axis: {p}");
        assert!(
            p.re <= -0.25 + 2.0 * cw,
            "traced point beyond the branching point: {p}"
        );
    }
    // and the ray is covered from the window edge to the branching point
    let mut x = -3.0 + cw;
    while x < -0.25 - tol {
        let zp = Complex64::new(x, 0.0);
        let d = all
            .iter()
            .map(|p| (p - zp).norm())
            .fold(f64::INFINITY, f64::min);
        assert!(d <= tol, "ray point {zp} uncovered (distance {d:.4})");
        x += cw;
    }
    assert!(t0.elapsed().as_secs_f64() < 10.0, "budget exceeded");
    pass("criterion 2 (equimodular set of the quadratic equation)", t0);
}

#[test]
fn criterion_03_slow_growth_hand_case() {
    let t0 = Instant::now();
    let def = quad();
    let init = parse_initial("1, -1").unwrap();
    let cfg = LociConfig::default();
    let (_, cands) = loci::slow_growth_candidates(&def, &init, &cfg).unwrap();
    // 𝒮 = {0, 2} as a point set, to 1e−10
    assert_eq!(cands.len(), 2);
    for target in [Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)] {
        assert!(
            cands.iter().any(|(z, _)| (z - target).norm() <= 1e-10),
            "candidate {target} missing from {cands:?}"
        );
    }
    // Σ = {2}
    let sigma = loci::slow_growth_set(&def, &init, &cfg).unwrap();
    assert_eq!(sigma.len(), 1);
    assert!((sigma[0].0 - Complex64::new(2.0, 0.0)).norm() <= 1e-10);
    // the limit function vanishes there
    let g = spectrum::limit_g(&def, &init, Complex64::new(2.0, 0.0), cfg.dominance_tol).unwrap();
    assert!(g.norm() <= 1e-10, "limit_g(2) = {g}");
    pass("criterion 3 (slow growth of the quadratic with init {1,-1})", t0);
}

/// Locus set over a window that covers the branching points and candidates.
fn locus_for(def: &DefiningPolynomial, init: &InitialTuple, cfg: &LociConfig) -> LocusSet {
    let mut anchors: Vec<Complex64> = loci::pole_locus(def, init, cfg);
    if let Ok(d) = loci::branch_points(def, cfg) {
        anchors.extend(d);
    }
    if let Ok((_, cands)) = loci::slow_growth_candidates(def, init, cfg) {
        anchors.extend(cands.into_iter().map(|(z, _)| z));
    }
    let window = Window::around(&anchors, 1.5);
    LocusSet::compute(def, init, window, (256, 256), cfg).unwrap()
}

#[test]
fn criterion_04_no_spurious_poles_for_standard_init() {
    let t0 = Instant::now();
    let cfg = LociConfig::default();
    let threeconj = experiments::three_conj_def(&GaussRat::from_integer(1));
    let systems: Vec<(&str, DefiningPolynomial)> =
        vec![("quadratic", quad()), ("four-term C=1", threeconj), ("three-branch", fig1())];
    for (name, def) in systems {
        let init = InitialTuple::standard(def.k());
        let locus = locus_for(&def, &init, &cfg);
        assert!(
            locus.sigma.is_empty(),
            "{name}: standard init must have empty Σ"
        );
        let eps = 2.0 * locus.cell.0.hypot(locus.cell.1);
        let seq = generate_exact(&def, &init, 31).unwrap();
        for n in def.k()..=31 {
            let r = match seq.ratio_function(n) {
                Ok(r) => r.to_float(),
                Err(e) => panic!("{name}: ratio r_{n} failed: {e}"),
            };
            let report = poles::poles_and_residues(&r, n, &cfg.root_cfg).unwrap();
            let report = poles::classify_poles(report, &locus, eps);
            assert_eq!(
                poles::spurious_count(&report),
                0,
                "{name}: spurious pole at n = {n}"
            );
        }
    }
    pass("criterion 4 (standard initial tuple has no spurious poles, n <= 31)", t0);
}

#[test]
fn criterion_05_spurious_bound_alternate_triple() {
    let t0 = Instant::now();
    let def = fig1();
    let init = fig1_alt_init();
    let cfg = LociConfig::default();
    let locus = locus_for(&def, &init, &cfg);
    let sigma_card = locus.sigma_cardinality();
    let seq = generate_exact(&def, &init, 31).unwrap();
    let r31 = seq.ratio_function(31).unwrap().to_float();
    let report = poles::poles_and_residues(&r31, 31, &cfg.root_cfg).unwrap();
    let eps = 2.0 * locus.cell.0.hypot(locus.cell.1);
    let report = poles::classify_poles(report, &locus, eps);
    let spurious = poles::spurious_count(&report);
    // the bound of the theory: spurious total order never exceeds ‖Σ‖
    assert!(
        spurious <= sigma_card,
        "spurious_count(31) = {spurious} exceeds ‖Σ‖ = {sigma_card}"
    );
    assert!(spurious <= 9, "spurious_count(31) = {spurious} exceeds 9");
    assert!(
        t0.elapsed().as_secs_f64() < 60.0,
        "budget exceeded: {:?}",
        t0.elapsed()
    );
    // The quoted cardinality for this system is 9. Exact computation gives
    // ‖Σ‖ = 8: the degree-30 candidate resultant has 24 distinct roots
    // (three of them triple), exactly eight of which satisfy the
    // slow-growth criterion — confirmed independently by scanning
    // |q_n/λ^n| over the plane via the raw recursion, and consistent with
    // the eight spurious poles of r_31 found above. The assertion is kept
    // as stated rather than adjusted to the measurement.
    assert_eq!(
        sigma_card, 9,
        "quoted ‖Σ‖ = 9, exact computation gives {sigma_card}"
    );
    pass("criterion 5 (spurious bound for the alternate triple)", t0);
}

#[test]
fn criterion_06_branching_discriminant_identity() {
    let t0 = Instant::now();
    let (holds, ratio) = experiments::branching_discriminant_identity();
    assert!(holds, "discriminant identity fails as exact polynomials");
    let r = ratio.unwrap();
    assert!(!r.is_zero());
    assert!(t0.elapsed().as_secs_f64() < 1.0, "budget exceeded");
    pass("criterion 6 (branching discriminant identity, exact in C)", t0);
}

#[test]
fn criterion_07_degenerate_parameters() {
    let t0 = Instant::now();
    let found = experiments::degenerate_c_values();
    assert_eq!(found.len(), 2, "expected exactly two degenerate values");
    let at3 = &found[0];
    let atm1 = &found[1];
    assert!((at3.c - 3.0).abs() <= 1e-9);
    assert!((atm1.c + 1.0).abs() <= 1e-9);
    assert!((at3.z - Complex64::new(-3.0, 0.0)).norm() <= 1e-9);
    assert!((at3.tau - Complex64::new(-1.0, 0.0)).norm() <= 1e-9);
    assert!((atm1.z - Complex64::new(1.0, 0.0)).norm() <= 1e-9);
    assert!((atm1.tau - Complex64::new(1.0, 0.0)).norm() <= 1e-9);
    pass("criterion 7 (degenerate parameter values 3 and -1)", t0);
}

#[test]
fn criterion_08_zero_reality_across_the_parameter() {
    let t0 = Instant::now();
    let cfg = RootConfig::default();
    // below 3: a nonreal zero of p_41 near a nonreal branching point
    for c_int in [2i64, 1, 0, -1, -2] {
        let c = GaussRat::from_integer(c_int);
        let outcome = experiments::real_zero_check(&c, 41, &cfg).unwrap();
        assert!(!outcome.all_real, "C = {c_int}: p_41 unexpectedly real-rooted");
        let branch = experiments::branching_points(&c, &cfg).unwrap();
        let nonreal_bp: Vec<Complex64> = branch
            .iter()
            .map(|(z, _)| *z)
            .filter(|z| z.im.abs() > 1e-7)
            .collect();
        assert!(!nonreal_bp.is_empty(), "C = {c_int}: no nonreal branching point");
        let witness_near_bp = outcome.witnesses.iter().any(|w| {
            w.im.abs() > 1e-4
                && nonreal_bp.iter().any(|b| (w - b).norm() <= 0.5)
        });
        assert!(
            witness_near_bp,
            "C = {c_int}: no nonreal zero within 0.5 of a nonreal branching point; \
             witnesses: {:?}",
            outcome.witnesses
        );
    }
    // at and above 3.5: certified real-rooted with consecutive interlacing
    for (num, den) in [(7i64, 2i64), (4, 1)] {
        let c = GaussRat::from_rational(num, den);
        let outcome = experiments::real_zero_check(&c, 41, &cfg).unwrap();
        assert!(outcome.all_real, "C = {num}/{den}: p_41 must be real-rooted");
        let seq = experiments::three_term_sequence(&c, 41).unwrap();
        let verdict =
            ratapprox::poly::interlace_strictly_exact(&seq[41], &seq[40]).expect("real data");
        assert!(verdict, "C = {num}/{den}: p_41 and p_40 must interlace");
    }
    assert!(
        t0.elapsed().as_secs_f64() < 30.0,
        "budget exceeded: {:?}",
        t0.elapsed()
    );
    pass("criterion 8 (zero reality and interlacing across C)", t0);
}

#[test]
fn criterion_09_cauchy_reconstruction() {
    let t0 = Instant::now();
    let def = fig1();
    let init = InitialTuple::standard(3);
    let cfg = RootConfig::default();
    let seq = generate_exact(&def, &init, 10).unwrap();
    let r10 = seq.ratio_function(10).unwrap().to_float();
    let report = poles::poles_and_residues(&r10, 10, &cfg).unwrap();
    let residual = poles::cauchy_reconstruct(&report, &r10).unwrap();
    assert!(
        residual <= 1e-8,
        "partial-fraction reconstruction residual {residual:.3e} too large"
    );
    pass("criterion 9 (Cauchy/partial-fraction reconstruction of r_10)", t0);
}

#[test]
fn criterion_10_property_suite() {
    let t0 = Instant::now();
    let cfg = LociConfig::default();

    // (a) companion matrix consistency: det(ζI − T(z)) equals the symbol
    // polynomial at k+1 sample values of ζ, for 100 random z
    let def = fig1();
    let mut rng = Lcg(0x5eed5eed5eed5eed);
    let mut checked = 0;
    while checked < 100 {
        let z = rng.complex_in(2.5);
        let t = match spectrum::companion(&def, z) {
            Ok(t) => t,
            Err(_) => continue, // on the pole locus, resample
        };
        let chi = spectrum::symbol_poly_at(&def, z).unwrap();
        for j in 0..=def.k() {
            let zeta = Complex64::new(-1.3 + j as f64, 0.7 - 0.2 * j as f64);
            let direct = det_shifted(&t, zeta);
            let via_chi = chi.eval(&zeta);
            assert!(
                (direct - via_chi).norm() <= 1e-10 * (1.0 + via_chi.norm()),
                "characteristic polynomial mismatch at z = {z}, ζ = {zeta}"
            );
        }
        checked += 1;
    }

    // (b) cleared recursion residual is exactly zero
    let init = parse_initial("z, 1/(z-I)").unwrap();
    let seq = generate_exact(&quad(), &init, 15).unwrap();
    let pk = quad().p_k().clone();
    for n in 2..=15 {
        let mut acc: Poly<GaussRat> = seq.numerator(n).clone();
        let mut pw: Poly<GaussRat> = Poly::one();
        for i in 1..=2 {
            acc = acc.add(&quad().p(2 - i).mul(&pw).mul(seq.numerator(n - i)));
            pw = pw.mul(&pk);
        }
        assert!(acc.is_zero(), "nonzero recursion residual at n = {n}");
    }

    // (c) Σ ⊆ 𝒮 for the two nontrivial systems of the suite
    for (def, init) in [
        (quad(), parse_initial("1, -1").unwrap()),
        (fig1(), fig1_alt_init()),
    ] {
        let (_, cands) = loci::slow_growth_candidates(&def, &init, &cfg).unwrap();
        let sigma = loci::slow_growth_set(&def, &init, &cfg).unwrap();
        for (z, _) in &sigma {
            assert!(
                cands.iter().any(|(c, _)| (c - z).norm() <= 1e-9 * (1.0 + z.norm())),
                "Σ point {z} outside 𝒮"
            );
        }
    }

    // (d) traced segment ends anchor at branching points or the window edge
    for (def, window) in [
        (quad(), Window::new(-3.0, 1.0, -1.0, 1.0).unwrap()),
        (fig1(), Window::new(-2.5, 2.5, -2.5, 2.5).unwrap()),
    ] {
        let trace = loci::trace_equimodular(&def, window, (256, 256), &cfg).unwrap();
        let delta = loci::branch_points(&def, &cfg).unwrap();
        let (cw, ch) = trace.cell;
        let reach = 3.0 * cw.hypot(ch);
        for seg in &trace.segments {
            for end in [seg.first().unwrap(), seg.last().unwrap()] {
                let near_delta = delta.iter().any(|d| (end - d).norm() <= reach);
                let near_edge = (end.re - window.re_min).abs() <= reach
                    || (window.re_max - end.re).abs() <= reach
                    || (end.im - window.im_min).abs() <= reach
                    || (window.im_max - end.im).abs() <= reach;
                let near_junction = trace
                    .segments
                    .iter()
                    .filter(|other| !std::ptr::eq(*other, seg))
                    .any(|other| {
                        other
                            .iter()
                            .any(|p| (p - end).norm() <= reach)
                    });
                assert!(
                    near_delta || near_edge || near_junction,
                    "segment end {end} floats free of every anchor"
                );
            }
        }
    }
    pass("criterion 10 (property suite)", t0);
}

/// det(ζI − T) by Gaussian elimination with partial pivoting.
fn det_shifted(t: &[Vec<Complex64>], zeta: Complex64) -> Complex64 {
    let k = t.len();
    let mut m: Vec<Vec<Complex64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let d = if i == j { zeta } else { Complex64::new(0.0, 0.0) };
                    d - t[i][j]
                })
                .collect()
        })
        .collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..k {
            let f = m[row][col] / m[col][col];
            for j in col..k {
                let sub = f * m[col][j];
                m[row][j] -= sub;
            }
        }
    }
    det
}
