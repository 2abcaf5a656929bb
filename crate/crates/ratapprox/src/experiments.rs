//! The four-term recurrence family `p_n = z·p_{n−1} − C·p_{n−2} − p_{n−3}`
//! and the figure-style drivers built on the rest of the crate.
//!
//! For real `C` the reality of the zeros of `p_n` is governed by the
//! branching points of the symbol curve `t³ − z·t² + C·t + 1 = 0`: for
//! `C < 3` two branching points leave the real axis, the equimodular set
//! ends at them, and high-degree `p_n` pick up nonreal zeros nearby.

use crate::algfun::{parse_defining, DefiningPolynomial, InitialTuple};
use crate::emit::{self, SvgPlot};
use crate::error::ExperimentError;
use crate::loci::{self, LociConfig, LocusSet, Window};
use crate::poles;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::recursion::{generate_exact, SequenceRep};
use crate::resultant::discriminant;
use crate::roots::{poly_roots_exact, RootConfig};
use crate::scalar::{Complex64, Field, GaussRat, Ring};
use num_rational::BigRational;
use num_traits::Signed;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Defining polynomial whose symbol is `t³ − z·t² + C·t + 1`.
pub fn three_conj_def(c: &GaussRat) -> DefiningPolynomial {
    DefiningPolynomial::new(vec![
        Poly::constant(GaussRat::one()),          // P_0 = 1
        Poly::constant(c.clone()),                // P_1 = C
        Poly::monomial(GaussRat::from_integer(-1), 1), // P_2 = −z
        Poly::constant(GaussRat::one()),          // P_3 = 1
    ])
    .expect("valid degree-3 equation")
}

/// Initial tuple `{0, 0, 1}` embedding `p_{−2} = p_{−1} = 0, p_0 = 1`.
pub fn three_conj_init() -> InitialTuple {
    InitialTuple::standard(3)
}

/// `p_0 .. p_{n_max}` computed exactly.
pub fn three_term_sequence(
    c: &GaussRat,
    n_max: usize,
) -> Result<Vec<Poly<GaussRat>>, ExperimentError> {
    let def = three_conj_def(c);
    let seq = generate_exact(&def, &three_conj_init(), n_max + 2)?;
    // q_{j+2} = p_j, and P_k = 1, so numerators are the polynomials
    Ok((0..=n_max).map(|j| seq.numerator(j + 2).clone()).collect())
}

/// The cubic whose roots are the branching points:
/// `4z³ + C²z² − 18C·z − 27 − 4C³`.
pub fn branching_cubic(c: &GaussRat) -> Poly<GaussRat> {
    let c2 = c.mul_ref(c);
    let c3 = c2.mul_ref(c);
    let four = GaussRat::from_integer(4);
    Poly::new(vec![
        GaussRat::from_integer(-27).sub_ref(&four.mul_ref(&c3)),
        GaussRat::from_integer(-18).mul_ref(c),
        c2,
        four,
    ])
}

/// Branching points of the symbol curve at parameter `C`, with
/// multiplicity. Cross-checked against the ζ-discriminant of the symbol.
pub fn branching_points(
    c: &GaussRat,
    cfg: &RootConfig,
) -> Result<Vec<(Complex64, usize)>, ExperimentError> {
    let cubic = branching_cubic(c);
    let roots = poly_roots_exact(&cubic, cfg)?;
    debug_assert!(
        {
            let lcfg = LociConfig::default();
            match loci::branch_points(&three_conj_def(c), &lcfg) {
                Ok(delta) => roots.iter().all(|(r, _)| {
                    delta.iter().any(|d| (r - d).norm() <= 1e-8 * (1.0 + d.norm()))
                }),
                Err(_) => false,
            }
        },
        "branching cubic disagrees with the symbol discriminant at C = {c}"
    );
    Ok(roots)
}

/// Checks, as an exact polynomial identity in `C`, that the z-discriminant
/// of the branching cubic equals `64(C−3)³(C²+3C+9)³` up to one constant.
/// Returns the verdict and the constant.
pub fn branching_discriminant_identity() -> (bool, Option<GaussRat>) {
    // the cubic in z with coefficients in C (inner variable)
    let c1 = |v: i64, p: usize| Poly::monomial(GaussRat::from_integer(v), p);
    let cubic: Poly<Poly<GaussRat>> = Poly::new(vec![
        c1(-27, 0).add(&c1(-4, 3)), // −27 − 4C³
        c1(-18, 1),                 // −18C
        c1(1, 2),                   // C²
        c1(4, 0),                   // 4
    ]);
    let mine = match discriminant(&cubic) {
        Ok(d) => d,
        Err(_) => return (false, None),
    };
    // 64·(C−3)³·(C²+3C+9)³
    let expected = Poly::from_i64(&[64])
        .mul(&Poly::from_i64(&[-3, 1]).pow(3))
        .mul(&Poly::from_i64(&[9, 3, 1]).pow(3));
    let (ml, el) = match (mine.leading_coeff(), expected.leading_coeff()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => return (false, None),
    };
    let ratio = el.div_ref(&ml);
    let holds = mine.scale(&ratio) == expected;
    (holds, holds.then_some(ratio))
}

#[derive(Clone, Debug)]
pub struct DegenerateParam {
    pub c: f64,
    pub z: Complex64,
    pub tau: Complex64,
    pub theta: f64,
}

/// Real parameter values where a branching point degenerates (the double
/// root of the symbol ties in modulus with the remaining root). Found by
/// scanning the closed-form curve `C(θ) = e^{−2iφ} + 2e^{iφ}`,
/// `φ = (θ + 4kπ)/3`, for real values.
pub fn degenerate_c_values() -> Vec<DegenerateParam> {
    let c_of = |theta: f64, k: usize| -> Complex64 {
        let phi = (theta + 4.0 * std::f64::consts::PI * k as f64) / 3.0;
        Complex64::from_polar(1.0, -2.0 * phi) + Complex64::from_polar(2.0, phi)
    };
    let mut found: Vec<DegenerateParam> = Vec::new();
    let n_grid = 3000usize;
    let two_pi = 2.0 * std::f64::consts::PI;
    for k in 0..3 {
        let im_at = |t: f64| c_of(t, k).im;
        let mut prev_t = 0.0;
        let mut prev = im_at(prev_t);
        for j in 1..=n_grid {
            let t = two_pi * j as f64 / n_grid as f64;
            let cur = im_at(t);
            if prev == 0.0 || prev.signum() != cur.signum() {
                // bisect the bracket
                let (mut lo, mut hi) = (prev_t, t);
                let mut flo = im_at(lo);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    let fm = im_at(mid);
                    if fm == 0.0 {
                        lo = mid;
                        break;
                    }
                    if flo.signum() == fm.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                let mut theta = 0.5 * (lo + hi);
                // Im C = 2·sin φ·(1−cos φ) vanishes exactly at φ = mπ, and
                // its zeros are third order, so polish the bracket by
                // snapping to the nearest multiple.
                let pi = std::f64::consts::PI;
                let phi = (theta + 4.0 * pi * k as f64) / 3.0;
                let m = (phi / pi).round();
                if (phi - m * pi).abs() < 1e-3 {
                    theta = 3.0 * m * pi - 4.0 * pi * k as f64;
                }
                let c = c_of(theta, k);
                // recover τ and z from the degenerate factorization
                let tau = -Complex64::from_polar(1.0, (-theta + 2.0 * pi * k as f64) / 3.0);
                let z = tau * (Complex64::new(2.0, 0.0) + Complex64::from_polar(1.0, theta));
                if c.im.abs() < 1e-9
                    && !found.iter().any(|f| (f.c - c.re).abs() < 1e-4)
                {
                    found.push(DegenerateParam {
                        c: c.re,
                        z,
                        tau,
                        theta,
                    });
                }
            }
            prev_t = t;
            prev = cur;
        }
    }
    found.sort_by(|a, b| b.c.total_cmp(&a.c));
    found
}

#[derive(Clone, Debug)]
pub struct RealZeroOutcome {
    pub all_real: bool,
    pub zeros: Vec<Complex64>,
    pub witnesses: Vec<Complex64>,
}

/// Are all zeros of `p_n` real?
///
/// The verdict is certified by an exact Sturm count whenever the
/// coefficients are real — for the degrees involved the integer
/// coefficients overflow the 53-bit float mantissa, and clustered real
/// roots of the rounded polynomial acquire spurious imaginary parts of
/// order 1e−2, far beyond any polish-and-threshold repair. Witnesses of
/// nonreality are still reported from the float roots (the genuinely
/// nonreal zeros sit far from the axis).
pub fn real_zero_check(
    c: &GaussRat,
    n: usize,
    cfg: &RootConfig,
) -> Result<RealZeroOutcome, ExperimentError> {
    let p = three_term_sequence(c, n)?.pop().expect("n-th entry");
    let roots = poly_roots_exact(&p, cfg)?;
    let mut zeros = Vec::new();
    for (root, mult) in &roots {
        for _ in 0..*mult {
            zeros.push(*root);
        }
    }
    match crate::poly::all_roots_real_exact(&p) {
        Some(true) => Ok(RealZeroOutcome {
            all_real: true,
            zeros,
            witnesses: Vec::new(),
        }),
        Some(false) => {
            let witnesses: Vec<Complex64> = roots
                .iter()
                .map(|(z, _)| *z)
                .filter(|z| z.im.abs() > 1e-4 * (1.0 + z.norm()))
                .collect();
            Ok(RealZeroOutcome {
                all_real: false,
                zeros,
                witnesses,
            })
        }
        None => {
            // nonreal coefficients: fall back to the float test with one
            // Newton polish and a relative imaginary-part threshold
            let pf = p.to_float();
            let dpf = pf.derivative();
            let mut witnesses = Vec::new();
            for (root, _) in &roots {
                let polished = {
                    let dv = dpf.eval(root);
                    if dv.norm() > 0.0 {
                        let step = pf.eval(root) / dv;
                        if step.norm() < 0.5 * (1.0 + root.norm()) {
                            root - step
                        } else {
                            *root
                        }
                    } else {
                        *root
                    }
                };
                if polished.im.abs() > 1e-7 * (1.0 + polished.norm()) {
                    witnesses.push(*root);
                }
            }
            Ok(RealZeroOutcome {
                all_real: witnesses.is_empty(),
                zeros,
                witnesses,
            })
        }
    }
}

/// Strict interlacing of two real zero sets (sizes differing by at most
/// one): sorted and merged, the source labels must alternate.
pub fn real_interlacing(a: &[f64], b: &[f64]) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    if (a.len() as i64 - b.len() as i64).abs() > 1 {
        return false;
    }
    let mut xs: Vec<(f64, u8)> = a
        .iter()
        .map(|&x| (x, 0u8))
        .chain(b.iter().map(|&x| (x, 1u8)))
        .collect();
    xs.sort_by(|p, q| p.0.total_cmp(&q.0));
    xs.windows(2).all(|w| w[0].1 != w[1].1)
}

#[derive(Clone, Copy, Debug)]
pub struct InterlacingParams {
    /// Zeros farther than this from the traced curves are ignored.
    pub projection_radius: f64,
    /// Arclength excluded near segment ends and junctions.
    pub exclusion_radius: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InterlacingOutcome {
    Confirmed,
    Violated { segment: usize },
    Indeterminate { reason: String },
}

/// Experimental check of zero interlacing along the equimodular curves:
/// zeros of `q_n` and `q_{n+1}` are projected onto the nearest traced
/// segment, neighborhoods of endpoints and junctions are excluded, and the
/// two families must alternate in arclength order on every segment with at
/// least four projected zeros.
pub fn interlacing_check(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    n: usize,
    loci: &LocusSet,
    params: &InterlacingParams,
    cfg: &RootConfig,
) -> Result<InterlacingOutcome, ExperimentError> {
    let seq = generate_exact(def, init, n + 1)?;
    let za = zeros_of_q(&seq, n, cfg)?;
    let zb = zeros_of_q(&seq, n + 1, cfg)?;
    Ok(projection_interlacing(&za, &zb, loci, params))
}

/// Zeros of `q_n` (numerator zeros with structural `P_k` powers removed).
pub fn zeros_of_q(
    seq: &SequenceRep,
    n: usize,
    cfg: &RootConfig,
) -> Result<Vec<Complex64>, ExperimentError> {
    let mut p = seq.numerator(n).clone();
    let pk = seq.def().p_k();
    if !pk.is_constant() && !p.is_zero() {
        while let Some(q) = p.try_exact_div(pk) {
            p = q;
        }
    }
    if p.degree().is_none_or(|d| d == 0) {
        return Ok(Vec::new());
    }
    Ok(poly_roots_exact(&p, cfg)?
        .into_iter()
        .map(|(z, _)| z)
        .collect())
}

pub fn projection_interlacing(
    zeros_a: &[Complex64],
    zeros_b: &[Complex64],
    loci: &LocusSet,
    params: &InterlacingParams,
) -> InterlacingOutcome {
    let n_seg = loci.xi_segments.len();
    if n_seg == 0 {
        return InterlacingOutcome::Indeterminate {
            reason: "no traced segments".into(),
        };
    }
    let lengths: Vec<f64> = loci
        .xi_segments
        .iter()
        .map(|s| loci::polyline_length(s))
        .collect();
    let mut marks: Vec<Vec<(f64, u8)>> = vec![Vec::new(); n_seg];
    for (family, zeros) in [(0u8, zeros_a), (1u8, zeros_b)] {
        for z in zeros {
            // nearest segment wins the projection
            let best = loci
                .xi_segments
                .iter()
                .enumerate()
                .filter_map(|(si, seg)| {
                    loci::project_to_polyline(*z, seg).map(|(d, s, _)| (si, d, s))
                })
                .min_by(|a, b| a.1.total_cmp(&b.1));
            if let Some((si, d, s)) = best {
                if d <= params.projection_radius
                    && s > params.exclusion_radius
                    && s < lengths[si] - params.exclusion_radius
                {
                    marks[si].push((s, family));
                }
            }
        }
    }
    let mut checked_any = false;
    for (si, mut ms) in marks.into_iter().enumerate() {
        if ms.len() < 4 {
            continue;
        }
        checked_any = true;
        ms.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.cmp(&q.1)));
        if !ms.windows(2).all(|w| w[0].1 != w[1].1) {
            return InterlacingOutcome::Violated { segment: si };
        }
    }
    if checked_any {
        InterlacingOutcome::Confirmed
    } else {
        InterlacingOutcome::Indeterminate {
            reason: "fewer than 4 zeros project onto every segment".into(),
        }
    }
}

// ---------------------------------------------------------------------------
// Parameter-sweep report
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Above3,
    AtThree,
    Between,
    AtMinusOne,
    BelowMinusOne,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Above3 => "C>3",
            Regime::AtThree => "C=3",
            Regime::Between => "-1<C<3",
            Regime::AtMinusOne => "C=-1",
            Regime::BelowMinusOne => "C<-1",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ThreeConjReport {
    pub c: GaussRat,
    pub complex_c: bool,
    pub regime: Regime,
    pub branch_points: Vec<(Complex64, usize)>,
    /// Exact value of the z-discriminant of the branching cubic at this C.
    pub discriminant_value: GaussRat,
    pub zeros_by_n: BTreeMap<usize, Vec<Complex64>>,
    pub nonreal_found: bool,
    pub nonreal_witnesses: Vec<Complex64>,
    pub interlacing_ok: Option<bool>,
}

pub fn three_conj_report(
    c: &GaussRat,
    n: usize,
    cfg: &RootConfig,
) -> Result<ThreeConjReport, ExperimentError> {
    let complex_c = !c.is_real();
    let three = BigRational::from_integer(3.into());
    let minus_one = -BigRational::from_integer(1.into());
    let regime = if c.re() > &three {
        Regime::Above3
    } else if c.re() == &three {
        Regime::AtThree
    } else if c.re() > &minus_one {
        Regime::Between
    } else if c.re() == &minus_one {
        Regime::AtMinusOne
    } else {
        Regime::BelowMinusOne
    };
    let branch_points = branching_points(c, cfg)?;
    let (holds, ratio) = branching_discriminant_identity();
    debug_assert!(holds);
    let disc_at_c = ratio
        .map(|r| {
            // 64(C−3)³(C²+3C+9)³ evaluated exactly; `r` reconciles the
            // normalization so this is the discriminant value itself.
            let _ = r;
            let t1 = c.sub_ref(&GaussRat::from_integer(3));
            let t2 = c
                .mul_ref(c)
                .add_ref(&c.mul_ref(&GaussRat::from_integer(3)))
                .add_ref(&GaussRat::from_integer(9));
            let cube = |x: &GaussRat| x.mul_ref(x).mul_ref(x);
            GaussRat::from_integer(64)
                .mul_ref(&cube(&t1))
                .mul_ref(&cube(&t2))
        })
        .unwrap_or_else(GaussRat::zero);
    // sign consistency: C²+3C+9 > 0 always, so sign(disc) = sign((C−3)³)
    if !complex_c {
        let re = c.re();
        let dv = disc_at_c.re();
        if re > &three {
            debug_assert!(dv.is_positive());
        } else if re < &three {
            debug_assert!(dv.is_negative());
        }
    }
    let pair = three_term_sequence(c, n)?;
    let p_n = pair.last().unwrap().clone();
    let p_prev = pair[n.saturating_sub(1)].clone();
    let mut zeros_by_n = BTreeMap::new();
    let zn: Vec<Complex64> = poly_roots_exact(&p_n, cfg)?
        .into_iter()
        .map(|(z, _)| z)
        .collect();
    let zp: Vec<Complex64> = if n >= 1 {
        poly_roots_exact(&p_prev, cfg)?
            .into_iter()
            .map(|(z, _)| z)
            .collect()
    } else {
        Vec::new()
    };
    zeros_by_n.insert(n, zn.clone());
    if n >= 1 {
        zeros_by_n.insert(n - 1, zp.clone());
    }
    let outcome = real_zero_check(c, n, cfg)?;
    // real-line interlacing is meaningful only when the zeros are real;
    // the verdict is exact (negated-remainder chain), not a float sort
    let interlacing_ok = if outcome.all_real && n >= 2 {
        crate::poly::interlace_strictly_exact(&p_n, &p_prev)
    } else {
        None
    };
    Ok(ThreeConjReport {
        c: c.clone(),
        complex_c,
        regime,
        branch_points,
        discriminant_value: disc_at_c,
        zeros_by_n,
        nonreal_found: !outcome.all_real,
        nonreal_witnesses: outcome.witnesses,
        interlacing_ok,
    })
}

// ---------------------------------------------------------------------------
// Figure drivers
// ---------------------------------------------------------------------------

pub fn figure1_def() -> DefiningPolynomial {
    parse_defining("(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)").expect("valid equation")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure1Triple {
    /// `{0, 0, 1}` — no spurious poles.
    Standard,
    /// `{z⁵+I·z²−5, z³−z+I, 1}` — eight isolated slow-growth points.
    Alternate,
}

pub fn figure1_init(triple: Figure1Triple) -> InitialTuple {
    match triple {
        Figure1Triple::Standard => InitialTuple::standard(3),
        Figure1Triple::Alternate => {
            crate::algfun::parse_initial("z^5+I*z^2-5, z^3-z+I, 1").expect("valid tuple")
        }
    }
}

#[derive(Clone, Debug)]
pub struct FigureSummary {
    pub n: usize,
    pub sigma_cardinality: usize,
    pub counts: BTreeMap<&'static str, usize>,
    pub spurious_total_order: usize,
    pub files: Vec<PathBuf>,
    pub window: Window,
}

/// Recomputes the pole picture of `r_n` for the three-branch test equation:
/// locus set, classified poles, and SVG/CSV files.
pub fn reproduce_figure1(
    triple: Figure1Triple,
    n: usize,
    grid: (usize, usize),
    out_dir: &Path,
    force: bool,
    cfg: &LociConfig,
) -> Result<FigureSummary, ExperimentError> {
    let def = figure1_def();
    let init = figure1_init(triple);
    let name = match triple {
        Figure1Triple::Standard => "figure1_standard",
        Figure1Triple::Alternate => "figure1_alternate",
    };
    pole_picture(&def, &init, n, grid, out_dir, name, force, cfg)
}

fn pole_picture(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    n: usize,
    grid: (usize, usize),
    out_dir: &Path,
    name: &str,
    force: bool,
    cfg: &LociConfig,
) -> Result<FigureSummary, ExperimentError> {
    // window covers the pole locus, branching points and slow-growth set
    let mut anchors: Vec<Complex64> = Vec::new();
    anchors.extend(loci::pole_locus(def, init, cfg));
    if let Ok(d) = loci::branch_points(def, cfg) {
        anchors.extend(d);
    }
    if let Ok((_, cands)) = loci::slow_growth_candidates(def, init, cfg) {
        anchors.extend(cands.into_iter().map(|(z, _)| z));
    }
    let window = Window::around(&anchors, 1.5);
    let locus_set = LocusSet::compute(def, init, window, grid, cfg)?;
    let seq = generate_exact(def, init, n)?;
    let r_n = seq.ratio_function(n)?.to_float();
    let report = poles::poles_and_residues(&r_n, n, &cfg.root_cfg)?;
    let eps = 2.0 * locus_set.cell.0.hypot(locus_set.cell.1);
    let report = poles::classify_poles(report, &locus_set, eps);

    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    for p in &report.poles {
        *counts.entry(emit::class_name(p.class)).or_default() += 1;
    }
    let mut plot = SvgPlot::new(window, 640.0);
    plot.axes();
    emit::locus_svg_layers(&mut plot, &locus_set);
    emit::pole_svg_layer(&mut plot, &report);
    let svg_path = out_dir.join(format!("{name}.svg"));
    let loci_path = out_dir.join(format!("{name}_loci.csv"));
    let poles_path = out_dir.join(format!("{name}_poles.csv"));
    emit::write_output(&svg_path, &plot.finish(), force)?;
    emit::write_output(&loci_path, &emit::locus_csv(&locus_set), force)?;
    emit::write_output(&poles_path, &emit::pole_csv(&[&report]), force)?;
    Ok(FigureSummary {
        n,
        sigma_cardinality: locus_set.sigma_cardinality(),
        counts,
        spurious_total_order: poles::spurious_count(&report),
        files: vec![svg_path, loci_path, poles_path],
        window,
    })
}

pub fn figure3_def() -> DefiningPolynomial {
    parse_defining("y^3 = (z+1-I)*y^2 + (z+1)*(z-I)*y + (z^3+10)").expect("valid equation")
}

pub fn figure3_init() -> InitialTuple {
    crate::algfun::parse_initial("z^6-z^4+I, z-I+2, (2+I)*z^2-8").expect("valid tuple")
}

#[derive(Clone, Debug)]
pub struct Figure3Summary {
    pub n: usize,
    pub interlacing: InterlacingOutcome,
    pub zero_counts: (usize, usize),
    pub files: Vec<PathBuf>,
    pub window: Window,
}

/// Zero interlacing picture for a four-term recursion with polynomial
/// coefficients: zeros of consecutive polynomials against the traced
/// equimodular curves.
pub fn reproduce_figure3(
    n: usize,
    grid: (usize, usize),
    out_dir: &Path,
    force: bool,
    cfg: &LociConfig,
) -> Result<Figure3Summary, ExperimentError> {
    let def = figure3_def();
    let init = figure3_init();
    let seq = generate_exact(&def, &init, n + 1)?;
    let za = zeros_of_q(&seq, n, &cfg.root_cfg)?;
    let zb = zeros_of_q(&seq, n + 1, &cfg.root_cfg)?;
    let mut anchors: Vec<Complex64> = za.clone();
    anchors.extend(zb.iter().copied());
    if let Ok(d) = loci::branch_points(&def, cfg) {
        anchors.extend(d);
    }
    let window = Window::around(&anchors, 1.5);
    let locus_set = LocusSet::compute(&def, &init, window, grid, cfg)?;
    let cell_diag = locus_set.cell.0.hypot(locus_set.cell.1);
    let params = InterlacingParams {
        projection_radius: 6.0 * cell_diag,
        exclusion_radius: 8.0 * cell_diag,
    };
    let outcome = projection_interlacing(&za, &zb, &locus_set, &params);

    let mut plot = SvgPlot::new(window, 640.0);
    plot.axes();
    emit::locus_svg_layers(&mut plot, &locus_set);
    for z in &zb {
        plot.circle(*z, 3.0, "#1c1c8a");
    }
    for z in &za {
        plot.circle(*z, 1.8, "#c41616");
    }
    let svg_path = out_dir.join(format!("figure3_n{n}.svg"));
    let csv_path = out_dir.join(format!("figure3_n{n}.csv"));
    emit::write_output(&svg_path, &plot.finish(), force)?;
    emit::write_output(
        &csv_path,
        &emit::points_csv(&[("zero_n", &za[..]), ("zero_n1", &zb[..])]),
        force,
    )?;
    Ok(Figure3Summary {
        n,
        interlacing: outcome,
        zero_counts: (za.len(), zb.len()),
        files: vec![svg_path, csv_path],
        window,
    })
}

/// Zero/branch-point picture for one parameter value of the four-term
/// family (a panel of the five-value regression sweep).
pub fn three_conj_figure(
    c: &GaussRat,
    n: usize,
    grid: (usize, usize),
    out_dir: &Path,
    force: bool,
    cfg: &LociConfig,
) -> Result<(ThreeConjReport, Vec<PathBuf>), ExperimentError> {
    let report = three_conj_report(c, n, &cfg.root_cfg)?;
    let def = three_conj_def(c);
    let zeros = report.zeros_by_n.get(&n).cloned().unwrap_or_default();
    let mut anchors: Vec<Complex64> = zeros.clone();
    anchors.extend(report.branch_points.iter().map(|(z, _)| *z));
    let window = Window::around(&anchors, 1.5);
    let locus_set = LocusSet::compute(&def, &three_conj_init(), window, grid, cfg)?;
    let mut plot = SvgPlot::new(window, 640.0);
    plot.axes();
    emit::locus_svg_layers(&mut plot, &locus_set);
    for z in &zeros {
        plot.circle(*z, 2.0, "#1c1c8a");
    }
    let tag = format!("threeconj_C{}", render_c_tag(c));
    let svg_path = out_dir.join(format!("{tag}.svg"));
    let csv_path = out_dir.join(format!("{tag}.csv"));
    emit::write_output(&svg_path, &plot.finish(), force)?;
    emit::write_output(&csv_path, &emit::points_csv(&[("zero_n", &zeros[..])]), force)?;
    Ok((report, vec![svg_path, csv_path]))
}

fn render_c_tag(c: &GaussRat) -> String {
    format!("{}", c)
        .replace('/', "over")
        .replace('+', "p")
        .replace('-', "m")
        .replace('*', "")
}

/// The canonical five-value sweep `C ∈ {4, 3, 1, −1, −2}`.
pub fn figure2_sweep(
    n: usize,
    grid: (usize, usize),
    out_dir: &Path,
    force: bool,
    cfg: &LociConfig,
) -> Result<Vec<(ThreeConjReport, Vec<PathBuf>)>, ExperimentError> {
    [4i64, 3, 1, -1, -2]
        .iter()
        .map(|&v| three_conj_figure(&GaussRat::from_integer(v), n, grid, out_dir, force, cfg))
        .collect()
}

/// Least-squares fit of `log err ~ a + n·log q` over the sample; returns
/// the geometric factor `q`. Nonpositive or nonfinite errors are skipped.
pub fn fit_geometric_rate(samples: &[(usize, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|(_, e)| *e > 0.0 && e.is_finite())
        .map(|(n, e)| (*n as f64, e.ln()))
        .collect();
    if pts.len() < 3 {
        return None;
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return None;
    }
    Some(((n * sxy - sx * sy) / denom).exp())
}

/// Convenience wrapper for building a rational function from one exact
/// ratio (used by the CLI's `ratio` subcommand output path).
pub fn exact_ratio(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    n: usize,
) -> Result<RatFun<GaussRat>, ExperimentError> {
    let seq = generate_exact(def, init, n)?;
    Ok(seq.ratio_function(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_integer(n)
    }

    #[test]
    fn first_polynomials_of_the_family() {
        let c = g(5);
        let ps = three_term_sequence(&c, 3).unwrap();
        assert_eq!(ps[0], Poly::from_i64(&[1]));
        assert_eq!(ps[1], Poly::from_i64(&[0, 1])); // p_1 = z
        // p_2 = z² − C
        assert_eq!(ps[2], Poly::new(vec![g(-5), g(0), g(1)]));
        // p_3 = z³ − 2Cz − 1
        assert_eq!(ps[3], Poly::new(vec![g(-1), g(-10), g(0), g(1)]));
    }

    #[test]
    fn branching_points_examples() {
        let cfg = RootConfig::default();
        // C = 3 degenerates at z = −3
        let pts = branching_points(&g(3), &cfg).unwrap();
        assert!(pts
            .iter()
            .any(|(z, _)| (z - Complex64::new(-3.0, 0.0)).norm() < 1e-7));
        // C = −1 contains z = 1
        let pts = branching_points(&g(-1), &cfg).unwrap();
        assert!(pts
            .iter()
            .any(|(z, _)| (z - Complex64::new(1.0, 0.0)).norm() < 1e-7));
        // C = 0: roots of 4z³ = 27, one real and two conjugates
        let pts = branching_points(&g(0), &cfg).unwrap();
        let real_root = (27.0f64 / 4.0).cbrt();
        assert!(pts
            .iter()
            .any(|(z, _)| (z - Complex64::new(real_root, 0.0)).norm() < 1e-9));
        let nonreal: Vec<_> = pts.iter().filter(|(z, _)| z.im.abs() > 1e-9).collect();
        assert_eq!(nonreal.len(), 2);
        assert!((nonreal[0].0.im + nonreal[1].0.im).abs() < 1e-9, "conjugate pair");
    }

    #[test]
    fn discriminant_identity_is_exact() {
        let (holds, ratio) = branching_discriminant_identity();
        assert!(holds);
        // evaluated at C = −1: 64·(−4)³·7³ = −1404928
        let r = ratio.unwrap();
        assert!(!r.is_zero());
        let t1 = g(-1).sub_ref(&g(3));
        let t2 = g(1).sub_ref(&g(3)).add_ref(&g(9)); // 1 − 3 + 9 = 7
        let cube = |x: &GaussRat| x.mul_ref(x).mul_ref(x);
        let v = g(64).mul_ref(&cube(&t1)).mul_ref(&cube(&t2));
        assert_eq!(v, g(-1404928));
    }

    #[test]
    fn degenerate_values_are_three_and_minus_one() {
        let found = degenerate_c_values();
        assert_eq!(found.len(), 2, "found: {found:?}");
        assert!((found[0].c - 3.0).abs() < 1e-9);
        assert!((found[1].c + 1.0).abs() < 1e-9);
        // recovered (z, τ): (−3, −1) and (1, 1)
        assert!((found[0].z - Complex64::new(-3.0, 0.0)).norm() < 1e-9);
        assert!((found[0].tau - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
        assert!((found[1].z - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        assert!((found[1].tau - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn real_zero_regimes_at_small_degree() {
        let cfg = RootConfig::default();
        // C = 4, moderate n: all real
        let out = real_zero_check(&g(4), 15, &cfg).unwrap();
        assert!(out.all_real, "witnesses: {:?}", out.witnesses);
        // C = 1, n = 41 has nonreal zeros
        let out = real_zero_check(&g(1), 41, &cfg).unwrap();
        assert!(!out.all_real);
    }

    #[test]
    fn real_interlacing_on_sorted_sets() {
        assert!(real_interlacing(&[0.0, 2.0, 4.0], &[1.0, 3.0]));
        assert!(!real_interlacing(&[0.0, 1.0, 4.0], &[2.0, 3.0]));
        assert!(!real_interlacing(&[0.0, 1.0], &[]));
    }

    #[test]
    fn regime_boundaries() {
        let cfg = RootConfig::default();
        assert_eq!(three_conj_report(&g(4), 5, &cfg).unwrap().regime, Regime::Above3);
        assert_eq!(three_conj_report(&g(3), 5, &cfg).unwrap().regime, Regime::AtThree);
        assert_eq!(three_conj_report(&g(1), 5, &cfg).unwrap().regime, Regime::Between);
        assert_eq!(three_conj_report(&g(-1), 5, &cfg).unwrap().regime, Regime::AtMinusOne);
        assert_eq!(three_conj_report(&g(-2), 5, &cfg).unwrap().regime, Regime::BelowMinusOne);
    }

    #[test]
    fn tiny_degree_interlacing_is_indeterminate() {
        let cfg = LociConfig::default();
        let c = g(4);
        let def = three_conj_def(&c);
        let window = Window::new(-6.0, 6.0, -2.0, 2.0).unwrap();
        let locus = LocusSet::compute(&def, &three_conj_init(), window, (64, 64), &cfg).unwrap();
        let cell_diag = locus.cell.0.hypot(locus.cell.1);
        let params = InterlacingParams {
            projection_radius: 4.0 * cell_diag,
            exclusion_radius: 6.0 * cell_diag,
        };
        // p_1 = z has a single zero: nothing to check
        let out = interlacing_check(&def, &three_conj_init(), 3, &locus, &params, &cfg.root_cfg)
            .unwrap();
        assert!(matches!(out, InterlacingOutcome::Indeterminate { .. }));
    }
}
