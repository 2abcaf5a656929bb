//! The geometric sets attached to a defining equation and initial tuple:
//!
//! * `Υ` (pole locus): zeros of `P_k` plus poles of the initial tuple;
//! * `Δ_T` (branching points): where the symbol polynomial has a multiple
//!   root in ζ, i.e. the discriminant in ζ vanishes;
//! * `Ξ` (equimodular discriminant): closure of the set of points whose two
//!   largest spectral moduli tie — traced as polylines over a quadtree;
//! * `𝒮 ⊇ Σ`: the resultant-cut candidate set and the set of slow growth,
//!   where the initial tuple loses its component on the dominant
//!   eigendirection. `Σ` is where spurious poles accumulate.

use crate::algfun::{DefiningPolynomial, InitialTuple};
use crate::error::LociError;
use crate::poly::Poly;
use crate::resultant::{discriminant, resultant};
use crate::roots::{poly_roots, poly_roots_exact, RootConfig};
use crate::scalar::{Complex64, GaussRat};
use crate::spectrum::{self, DominanceClass};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self, LociError> {
        let w = Window {
            re_min,
            re_max,
            im_min,
            im_max,
        };
        if !(re_min < re_max && im_min < im_max)
            || !re_min.is_finite()
            || !re_max.is_finite()
            || !im_min.is_finite()
            || !im_max.is_finite()
        {
            return Err(LociError::EmptyWindow);
        }
        Ok(w)
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    /// Smallest window containing all the given points, padded by half its
    /// extent and clamped to a sensible minimum size.
    pub fn around(points: &[Complex64], min_half: f64) -> Self {
        let mut re_lo = f64::INFINITY;
        let mut re_hi = f64::NEG_INFINITY;
        let mut im_lo = f64::INFINITY;
        let mut im_hi = f64::NEG_INFINITY;
        for p in points {
            re_lo = re_lo.min(p.re);
            re_hi = re_hi.max(p.re);
            im_lo = im_lo.min(p.im);
            im_hi = im_hi.max(p.im);
        }
        if points.is_empty() {
            re_lo = -1.0;
            re_hi = 1.0;
            im_lo = -1.0;
            im_hi = 1.0;
        }
        let cx = 0.5 * (re_lo + re_hi);
        let cy = 0.5 * (im_lo + im_hi);
        let hw = (0.75 * (re_hi - re_lo)).max(min_half);
        let hh = (0.75 * (im_hi - im_lo)).max(min_half);
        let h = hw.max(hh);
        Window {
            re_min: cx - h,
            re_max: cx + h,
            im_min: cy - h,
            im_max: cy + h,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LociConfig {
    pub root_cfg: RootConfig,
    /// Relative modulus gap below which two spectral numbers tie.
    pub dominance_tol: f64,
    /// Relative tolerance for the slow-growth criterion value at a
    /// candidate point.
    pub slow_growth_tol: f64,
    /// Candidates closer than this to `Υ` are excluded (the criterion is
    /// not defined there).
    pub upsilon_exclusion: f64,
    /// Cell-flagging threshold of the equimodular tracer, in units of the
    /// local top modulus.
    pub trace_tol: f64,
    /// Radius for deduplicating point sets.
    pub dedup_radius: f64,
}

impl Default for LociConfig {
    fn default() -> Self {
        LociConfig {
            root_cfg: RootConfig::default(),
            dominance_tol: spectrum::DEFAULT_DOMINANCE_TOL,
            slow_growth_tol: 1e-6,
            upsilon_exclusion: 1e-6,
            trace_tol: 1e-3,
            dedup_radius: 1e-7,
        }
    }
}

/// Everything the pole classifier needs, computed once per `(def, init)`.
#[derive(Clone, Debug)]
pub struct LocusSet {
    pub xi_segments: Vec<Vec<Complex64>>,
    pub xi_isolated: Vec<Complex64>,
    pub upsilon: Vec<Complex64>,
    pub delta_t: Vec<Complex64>,
    pub candidates_s: Vec<(Complex64, usize)>,
    pub sigma: Vec<(Complex64, usize)>,
    /// Candidates rejected because the point is nondominant (on or near Ξ).
    pub sigma_rejected_nondominant: Vec<Complex64>,
    pub window: Window,
    /// Finest tracer cell size (width, height).
    pub cell: (f64, f64),
    pub warnings: Vec<String>,
}

impl LocusSet {
    pub fn compute(
        def: &DefiningPolynomial,
        init: &InitialTuple,
        window: Window,
        grid: (usize, usize),
        cfg: &LociConfig,
    ) -> Result<LocusSet, LociError> {
        let upsilon = pole_locus(def, init, cfg);
        let delta_t = match branch_points(def, cfg) {
            Ok(d) => d,
            Err(LociError::DegreeTooLow) => Vec::new(),
            Err(e) => return Err(e),
        };
        let trace = trace_equimodular(def, window, grid, cfg)?;
        let (candidates_s, sigma, rejected) = match slow_growth_candidates(def, init, cfg) {
            Ok((_, cands)) => {
                let (sigma, rejected) = filter_slow_growth(def, init, &cands, &upsilon, cfg);
                (cands, sigma, rejected)
            }
            Err(LociError::IdenticallyZeroMu) | Err(LociError::ResultantIdenticallyZero) => {
                (Vec::new(), Vec::new(), Vec::new())
            }
            Err(e) => return Err(e),
        };
        Ok(LocusSet {
            xi_segments: trace.segments,
            xi_isolated: trace.isolated,
            upsilon,
            delta_t,
            candidates_s,
            sigma,
            sigma_rejected_nondominant: rejected,
            window,
            cell: trace.cell,
            warnings: trace.warnings,
        })
    }

    /// Total cardinality `‖Σ‖` (multiplicities included).
    pub fn sigma_cardinality(&self) -> usize {
        self.sigma.iter().map(|(_, m)| m).sum()
    }
}

/// Zeros of `P_k` together with all poles of the initial tuple.
pub fn pole_locus(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    cfg: &LociConfig,
) -> Vec<Complex64> {
    let mut points: Vec<Complex64> = Vec::new();
    if !def.p_k().is_constant() {
        if let Ok(roots) = poly_roots_exact(def.p_k(), &cfg.root_cfg) {
            points.extend(roots.into_iter().map(|(z, _)| z));
        }
    }
    for e in init.entries() {
        if e.den().degree().is_some_and(|d| d >= 1) {
            if let Ok(roots) = poly_roots_exact(e.den(), &cfg.root_cfg) {
                points.extend(roots.into_iter().map(|(z, _)| z));
            }
        }
    }
    dedup_points(&mut points, cfg.dedup_radius);
    points
}

/// Branching points of the symbol curve: zeros of the ζ-discriminant of
/// `χ_T`, cleared of its `P_k` denominator.
pub fn branch_points(
    def: &DefiningPolynomial,
    cfg: &LociConfig,
) -> Result<Vec<Complex64>, LociError> {
    if def.k() < 2 {
        return Err(LociError::DegreeTooLow);
    }
    // χ_T·P_k = P(ζ, z), so Disc_ζ(χ_T) = Disc_ζ(P)/P_k^(2k−2); reduce away
    // the P_k part and take the surviving zeros.
    let disc = discriminant(&def.as_poly2())?;
    if disc.is_zero() {
        // symbol curve is everywhere degenerate (non-squarefree P)
        return Ok(Vec::new());
    }
    let mut numerator = disc;
    if !def.p_k().is_constant() {
        let pk_pow = def.p_k().pow(2 * def.k() - 2);
        let g = numerator.gcd(&pk_pow).expect("nonzero");
        numerator = numerator.exact_div(&g);
    }
    if numerator.is_constant() {
        return Ok(Vec::new());
    }
    let roots = poly_roots_exact(&numerator, &cfg.root_cfg)?;
    let mut points: Vec<Complex64> = roots.into_iter().map(|(z, _)| z).collect();
    dedup_points(&mut points, cfg.dedup_radius);
    Ok(points)
}

fn dedup_points(points: &mut Vec<Complex64>, radius: f64) {
    points.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut out: Vec<Complex64> = Vec::with_capacity(points.len());
    for p in points.iter() {
        if !out
            .iter()
            .any(|q| (p - q).norm() <= radius * (1.0 + q.norm()))
        {
            out.push(*p);
        }
    }
    *points = out;
}

// ---------------------------------------------------------------------------
// Equimodular tracer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct TraceResult {
    pub segments: Vec<Vec<Complex64>>,
    pub isolated: Vec<Complex64>,
    pub cell: (f64, f64),
    pub warnings: Vec<String>,
}

/// Relative gap between the two largest spectral moduli at `z`; `None` on
/// the pole locus of the coefficients.
fn gap_rel(def_float: &[Poly<Complex64>], z: Complex64, root_cfg: &RootConfig) -> Option<f64> {
    let k = def_float.len() - 1;
    let pk = def_float[k].eval(&z);
    if pk.norm() == 0.0 || !pk.is_finite() {
        return None;
    }
    if k == 1 {
        return Some(1.0); // single spectral number: never equimodular
    }
    let mut coeffs: Vec<Complex64> = (0..k).map(|i| def_float[i].eval(&z) / pk).collect();
    coeffs.push(Complex64::new(1.0, 0.0));
    let p = Poly::new(coeffs);
    let roots = poly_roots(&p, root_cfg).ok()?;
    let mut moduli: Vec<f64> = Vec::with_capacity(k);
    for (r, m) in &roots {
        for _ in 0..*m {
            moduli.push(r.norm());
        }
    }
    moduli.sort_by(|a, b| b.total_cmp(a));
    if moduli.len() < 2 || moduli[0] == 0.0 {
        return Some(0.0);
    }
    Some((moduli[0] - moduli[1]) / moduli[0])
}

/// Adaptive quadtree trace of `Ξ` inside a window.
///
/// Cells are flagged when the minimum sampled gap is small either absolutely
/// (`trace_tol`) or relative to the within-cell variation — the gap is
/// nonnegative, so a sign test is unavailable and the variation term is what
/// detects a zero crossing between samples. Flagged cells refine to the grid
/// resolution; the resulting raster is thinned to one-cell width and chained
/// into polylines whose free ends snap to nearby branching points.
pub fn trace_equimodular(
    def: &DefiningPolynomial,
    window: Window,
    grid: (usize, usize),
    cfg: &LociConfig,
) -> Result<TraceResult, LociError> {
    let (nx, ny) = grid;
    if nx < 8 || ny < 8 {
        return Err(LociError::GridTooCoarse { nx, ny });
    }
    Window::new(window.re_min, window.re_max, window.im_min, window.im_max)?;
    let depth: u32 = (nx.max(ny) as f64).log2().ceil().clamp(4.0, 12.0) as u32;
    let n = 1usize << depth;
    let cell_w = window.width() / n as f64;
    let cell_h = window.height() / n as f64;

    let delta = match branch_points(def, cfg) {
        Ok(d) => d,
        Err(LociError::DegreeTooLow) => Vec::new(),
        Err(e) => return Err(e),
    };
    let delta_in: Vec<Complex64> = delta.into_iter().filter(|z| window.contains(*z)).collect();

    let def_float = def.to_float();
    let mut raster = vec![false; n * n];
    if def.k() >= 2 {
        // level-synchronous refinement from a uniform 16x16 start
        let uniform = depth.min(4);
        let mut frontier: Vec<(u32, u32)> = {
            let side = 1u32 << uniform;
            (0..side)
                .flat_map(|ix| (0..side).map(move |iy| (ix, iy)))
                .collect()
        };
        let mut level = uniform;
        while level <= depth {
            let side = 1u64 << level;
            let cw = window.width() / side as f64;
            let ch = window.height() / side as f64;
            let flagged: Vec<(u32, u32)> = frontier
                .par_iter()
                .filter(|&&(ix, iy)| {
                    let x0 = window.re_min + ix as f64 * cw;
                    let y0 = window.im_min + iy as f64 * ch;
                    cell_is_flagged(&def_float, x0, y0, cw, ch, cfg, &delta_in)
                })
                .cloned()
                .collect();
            if level == depth {
                for (ix, iy) in &flagged {
                    raster[*ix as usize + n * *iy as usize] = true;
                }
                break;
            }
            frontier = flagged
                .iter()
                .flat_map(|&(ix, iy)| {
                    [
                        (2 * ix, 2 * iy),
                        (2 * ix + 1, 2 * iy),
                        (2 * ix, 2 * iy + 1),
                        (2 * ix + 1, 2 * iy + 1),
                    ]
                })
                .collect();
            level += 1;
        }
    }

    let mut warnings = Vec::new();
    if raster.iter().all(|&b| !b) && !delta_in.is_empty() && def.k() >= 2 {
        warnings.push(format!(
            "no equimodular cells flagged although {} branching point(s) lie in the window; \
             the grid may be too coarse",
            delta_in.len()
        ));
    }

    thin_raster(&mut raster, n);
    let (segments, isolated) = chain_skeleton(&raster, n, window, cell_w, cell_h, &delta_in);
    Ok(TraceResult {
        segments,
        isolated,
        cell: (cell_w, cell_h),
        warnings,
    })
}

fn cell_is_flagged(
    def_float: &[Poly<Complex64>],
    x0: f64,
    y0: f64,
    cw: f64,
    ch: f64,
    cfg: &LociConfig,
    delta_in: &[Complex64],
) -> bool {
    // branching points force refinement so segment ends stay anchored
    if delta_in
        .iter()
        .any(|d| d.re >= x0 && d.re <= x0 + cw && d.im >= y0 && d.im <= y0 + ch)
    {
        return true;
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut seen = 0usize;
    for sx in 0..3 {
        for sy in 0..3 {
            let z = Complex64::new(
                x0 + cw * (sx as f64) / 2.0,
                y0 + ch * (sy as f64) / 2.0,
            );
            if let Some(g) = gap_rel(def_float, z, &cfg.root_cfg) {
                lo = lo.min(g);
                hi = hi.max(g);
                seen += 1;
            }
        }
    }
    if seen == 0 {
        return false;
    }
    lo <= cfg.trace_tol || lo <= hi - lo
}

/// Zhang–Suen thinning to a one-cell-wide skeleton.
fn thin_raster(raster: &mut [bool], n: usize) {
    let at = |r: &[bool], x: isize, y: isize| -> bool {
        if x < 0 || y < 0 || x >= n as isize || y >= n as isize {
            false
        } else {
            r[x as usize + n * y as usize]
        }
    };
    loop {
        let mut removed = false;
        for phase in 0..2 {
            let mut to_clear: Vec<usize> = Vec::new();
            for y in 0..n as isize {
                for x in 0..n as isize {
                    if !at(raster, x, y) {
                        continue;
                    }
                    // neighbors clockwise from north
                    let p = [
                        at(raster, x, y - 1),
                        at(raster, x + 1, y - 1),
                        at(raster, x + 1, y),
                        at(raster, x + 1, y + 1),
                        at(raster, x, y + 1),
                        at(raster, x - 1, y + 1),
                        at(raster, x - 1, y),
                        at(raster, x - 1, y - 1),
                    ];
                    let b: usize = p.iter().filter(|&&v| v).count();
                    if !(2..=6).contains(&b) {
                        continue;
                    }
                    let a = (0..8)
                        .filter(|&i| !p[i] && p[(i + 1) % 8])
                        .count();
                    if a != 1 {
                        continue;
                    }
                    let (c1, c2) = if phase == 0 {
                        (p[0] && p[2] && p[4], p[2] && p[4] && p[6])
                    } else {
                        (p[0] && p[2] && p[6], p[0] && p[4] && p[6])
                    };
                    if !c1 && !c2 {
                        to_clear.push(x as usize + n * y as usize);
                    }
                }
            }
            if !to_clear.is_empty() {
                removed = true;
                for idx in to_clear {
                    raster[idx] = false;
                }
            }
        }
        if !removed {
            return;
        }
    }
}

/// Chains skeleton pixels into polylines; free segment ends within reach of
/// a branching point snap onto it. Components of one or two cells become
/// isolated points.
fn chain_skeleton(
    raster: &[bool],
    n: usize,
    window: Window,
    cell_w: f64,
    cell_h: f64,
    delta_in: &[Complex64],
) -> (Vec<Vec<Complex64>>, Vec<Complex64>) {
    let idx_of = |x: usize, y: usize| x + n * y;
    let center = |x: usize, y: usize| {
        Complex64::new(
            window.re_min + (x as f64 + 0.5) * cell_w,
            window.im_min + (y as f64 + 0.5) * cell_h,
        )
    };
    let pixels: Vec<(usize, usize)> = (0..n)
        .flat_map(|y| (0..n).map(move |x| (x, y)))
        .filter(|&(x, y)| raster[idx_of(x, y)])
        .collect();
    if pixels.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let mut id_of = vec![usize::MAX; n * n];
    for (i, &(x, y)) in pixels.iter().enumerate() {
        id_of[idx_of(x, y)] = i;
    }
    // 8-neighbor adjacency, dropping diagonal edges shortcut by an
    // orthogonal pixel (keeps paths one cell wide)
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); pixels.len()];
    for (i, &(x, y)) in pixels.iter().enumerate() {
        for dx in -1i64..=1 {
            for dy in -1i64..=1 {
                if dx == 0 && dy == 0 {
                    continue;
                }
                let (qx, qy) = (x as i64 + dx, y as i64 + dy);
                if qx < 0 || qy < 0 || qx >= n as i64 || qy >= n as i64 {
                    continue;
                }
                let j = id_of[idx_of(qx as usize, qy as usize)];
                if j == usize::MAX {
                    continue;
                }
                if dx != 0 && dy != 0 {
                    let via_a = id_of[idx_of(qx as usize, y)];
                    let via_b = id_of[idx_of(x, qy as usize)];
                    if via_a != usize::MAX || via_b != usize::MAX {
                        continue; // diagonal redundant
                    }
                }
                adj[i].push(j);
            }
        }
    }

    // component sizes, to demote dust to isolated points
    let mut comp = vec![usize::MAX; pixels.len()];
    let mut comp_sizes: Vec<usize> = Vec::new();
    for start in 0..pixels.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let c = comp_sizes.len();
        let mut stack = vec![start];
        let mut size = 0;
        comp[start] = c;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        comp_sizes.push(size);
    }

    let mut isolated: Vec<Complex64> = Vec::new();
    let keep: Vec<bool> = (0..pixels.len())
        .map(|i| comp_sizes[comp[i]] > 2)
        .collect();
    {
        let mut done = vec![false; comp_sizes.len()];
        for (i, &(x, y)) in pixels.iter().enumerate() {
            let c = comp[i];
            if comp_sizes[c] <= 2 && !done[c] {
                done[c] = true;
                isolated.push(center(x, y));
            }
        }
    }

    // walk paths between nodes (endpoints or junctions)
    let degree = |i: usize| adj[i].iter().filter(|&&j| keep[j]).count();
    let is_node = |i: usize| degree(i) != 2;
    let mut visited_edges: std::collections::BTreeSet<(usize, usize)> = Default::default();
    let edge_key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut segments: Vec<Vec<usize>> = Vec::new();
    for i in 0..pixels.len() {
        if !keep[i] || !is_node(i) {
            continue;
        }
        for &j0 in &adj[i] {
            if !keep[j0] || visited_edges.contains(&edge_key(i, j0)) {
                continue;
            }
            let mut path = vec![i];
            let mut prev = i;
            let mut cur = j0;
            visited_edges.insert(edge_key(prev, cur));
            loop {
                path.push(cur);
                if is_node(cur) {
                    break;
                }
                let next = adj[cur]
                    .iter()
                    .copied()
                    .find(|&w| keep[w] && w != prev && !visited_edges.contains(&edge_key(cur, w)));
                match next {
                    Some(w) => {
                        visited_edges.insert(edge_key(cur, w));
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            segments.push(path);
        }
    }
    // leftover pure cycles
    for i in 0..pixels.len() {
        if !keep[i] || is_node(i) {
            continue;
        }
        for &j0 in &adj[i] {
            if !keep[j0] || visited_edges.contains(&edge_key(i, j0)) {
                continue;
            }
            let mut path = vec![i];
            let mut prev = i;
            let mut cur = j0;
            visited_edges.insert(edge_key(prev, cur));
            loop {
                path.push(cur);
                let next = adj[cur]
                    .iter()
                    .copied()
                    .find(|&w| keep[w] && w != prev && !visited_edges.contains(&edge_key(cur, w)));
                match next {
                    Some(w) => {
                        visited_edges.insert(edge_key(cur, w));
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            segments.push(path);
        }
    }

    let snap_radius = 2.5 * (cell_w.hypot(cell_h));
    let mut out: Vec<Vec<Complex64>> = Vec::new();
    for seg in segments {
        let mut pts: Vec<Complex64> = seg
            .iter()
            .map(|&i| {
                let (x, y) = pixels[i];
                center(x, y)
            })
            .collect();
        if pts.len() < 2 {
            continue;
        }
        // snap free ends to the nearest branching point in range
        let end_degrees = (degree(seg[0]), degree(*seg.last().unwrap()));
        if end_degrees.0 <= 1 {
            if let Some(d) = nearest(delta_in, pts[0], snap_radius) {
                pts.insert(0, d);
            }
        }
        if end_degrees.1 <= 1 {
            if let Some(d) = nearest(delta_in, *pts.last().unwrap(), snap_radius) {
                pts.push(d);
            }
        }
        out.push(pts);
    }
    (out, isolated)
}

fn nearest(points: &[Complex64], z: Complex64, radius: f64) -> Option<Complex64> {
    points
        .iter()
        .map(|p| (p, (p - z).norm()))
        .filter(|(_, d)| *d <= radius)
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(p, _)| *p)
}

/// Distance from a point to a polyline.
pub fn dist_to_polyline(z: Complex64, polyline: &[Complex64]) -> f64 {
    if polyline.is_empty() {
        return f64::INFINITY;
    }
    if polyline.len() == 1 {
        return (z - polyline[0]).norm();
    }
    polyline
        .windows(2)
        .map(|seg| dist_to_segment(z, seg[0], seg[1]))
        .fold(f64::INFINITY, f64::min)
}

fn dist_to_segment(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = ((z - a).re * ab.re + (z - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

/// Projection of a point onto a polyline: distance, arclength of the foot
/// point, and the foot point itself.
pub fn project_to_polyline(z: Complex64, polyline: &[Complex64]) -> Option<(f64, f64, Complex64)> {
    if polyline.len() < 2 {
        return None;
    }
    let mut best: Option<(f64, f64, Complex64)> = None;
    let mut acc_len = 0.0;
    for seg in polyline.windows(2) {
        let (a, b) = (seg[0], seg[1]);
        let ab = b - a;
        let len = ab.norm();
        if len > 0.0 {
            let t = (((z - a).re * ab.re + (z - a).im * ab.im) / (len * len)).clamp(0.0, 1.0);
            let foot = a + ab * t;
            let d = (z - foot).norm();
            if best.is_none_or(|(bd, _, _)| d < bd) {
                best = Some((d, acc_len + t * len, foot));
            }
        }
        acc_len += len;
    }
    best
}

/// Total arclength of a polyline.
pub fn polyline_length(polyline: &[Complex64]) -> f64 {
    polyline.windows(2).map(|s| (s[1] - s[0]).norm()).sum()
}

// ---------------------------------------------------------------------------
// Slow growth
// ---------------------------------------------------------------------------

/// The candidate polynomial `S(z) = Res_ζ(χ·P_k, ζ^{k−1}·D·P_k·μ)` together
/// with its roots (with multiplicity). `Σ ⊆ 𝒮` always; the converse is cut
/// down by [`slow_growth_set`].
pub fn slow_growth_candidates(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    cfg: &LociConfig,
) -> Result<(Poly<GaussRat>, Vec<(Complex64, usize)>), LociError> {
    let k = def.k();
    assert_eq!(init.len(), k, "initial tuple length must equal k");
    if k == 1 {
        // no ζ-elimination is possible; r_n is exactly the branch
        return Ok((Poly::one(), Vec::new()));
    }
    let prefactor = init.denominator_lcm();
    // cleared pairing: Σ_{i=1..k} Σ_{j=i..k} (q_{k−i}·D)·(−P_{k−j})·ζ^{k−1+i−j}
    let mut mu: Vec<Poly<GaussRat>> = vec![Poly::zero(); k];
    for i in 1..=k {
        let e = init.entry(k - i);
        if e.is_zero() {
            continue;
        }
        let cleared = e.num().mul(&prefactor.exact_div(e.den()));
        for j in i..=k {
            let term = cleared.mul(&def.p(k - j).neg());
            mu[k - 1 + i - j] = mu[k - 1 + i - j].add(&term);
        }
    }
    let mu_poly: Poly<Poly<GaussRat>> = Poly::new(mu);
    if mu_poly.is_zero() {
        return Err(LociError::IdenticallyZeroMu);
    }
    let s = resultant(&def.as_poly2(), &mu_poly)?;
    if s.is_zero() {
        return Err(LociError::ResultantIdenticallyZero);
    }
    if s.is_constant() {
        return Ok((s, Vec::new()));
    }
    let roots = poly_roots_exact(&s, &cfg.root_cfg)?;
    Ok((s, roots))
}

/// Filters `𝒮` down to `Σ`: keep points off `Υ` that are dominant and whose
/// slow-growth criterion value vanishes to tolerance. Multiplicity is the
/// multiplicity as a root of `S`.
pub fn slow_growth_set(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    cfg: &LociConfig,
) -> Result<Vec<(Complex64, usize)>, LociError> {
    let (_, candidates) = slow_growth_candidates(def, init, cfg)?;
    let upsilon = pole_locus(def, init, cfg);
    Ok(filter_slow_growth(def, init, &candidates, &upsilon, cfg).0)
}

fn filter_slow_growth(
    def: &DefiningPolynomial,
    init: &InitialTuple,
    candidates: &[(Complex64, usize)],
    upsilon: &[Complex64],
    cfg: &LociConfig,
) -> (Vec<(Complex64, usize)>, Vec<Complex64>) {
    let mut sigma = Vec::new();
    let mut rejected_nondominant = Vec::new();
    for &(z, mult) in candidates {
        let near_upsilon = upsilon
            .iter()
            .any(|u| (z - u).norm() <= cfg.upsilon_exclusion * (1.0 + u.norm()));
        if near_upsilon {
            continue;
        }
        let report = match spectrum::spectral_numbers(def, z, cfg.dominance_tol) {
            Ok(r) => r,
            Err(_) => continue,
        };
        if report.class != DominanceClass::Dominant {
            rejected_nondominant.push(z);
            continue;
        }
        let lambda = report.y_dom.unwrap();
        let (value, scale) = spectrum::slow_growth_criterion(def, init, z, lambda);
        if value.norm() <= cfg.slow_growth_tol * scale.max(f64::MIN_POSITIVE) {
            sigma.push((z, mult));
        }
    }
    (sigma, rejected_nondominant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algfun::{parse_defining, parse_initial};

    fn quad() -> DefiningPolynomial {
        parse_defining("y^2 - y - z").unwrap()
    }

    fn fig1() -> DefiningPolynomial {
        parse_defining("(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)").unwrap()
    }

    #[test]
    fn pole_locus_examples() {
        let cfg = LociConfig::default();
        // figure-1 equation, polynomial init: only the zero of z+1
        let ups = pole_locus(&fig1(), &InitialTuple::standard(3), &cfg);
        assert_eq!(ups.len(), 1);
        assert!((ups[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        // monic quadratic: empty
        let ups = pole_locus(&quad(), &InitialTuple::standard(2), &cfg);
        assert!(ups.is_empty());
        // a rational entry contributes its pole
        let init = parse_initial("1/(z-I), 1").unwrap();
        let ups = pole_locus(&quad(), &init, &cfg);
        assert_eq!(ups.len(), 1);
        assert!((ups[0] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn branch_points_quadratic() {
        let cfg = LociConfig::default();
        let d = branch_points(&quad(), &cfg).unwrap();
        assert_eq!(d.len(), 1);
        assert!((d[0] - Complex64::new(-0.25, 0.0)).norm() < 1e-12);
        // k = 1 is rejected
        let k1 = parse_defining("y - z").unwrap();
        assert!(matches!(branch_points(&k1, &cfg), Err(LociError::DegreeTooLow)));
    }

    #[test]
    fn trace_flags_the_real_ray_only() {
        let cfg = LociConfig::default();
        let window = Window::new(-3.0, 1.0, -1.0, 1.0).unwrap();
        let trace = trace_equimodular(&quad(), window, (64, 64), &cfg).unwrap();
        assert!(!trace.segments.is_empty(), "expected a traced segment");
        let (cw, ch) = trace.cell;
        let tol = 2.0 * cw.hypot(ch);
        for seg in &trace.segments {
            for p in seg {
                // on the ray: im ≈ 0, re ≤ −1/4 (+ tolerance)
                assert!(p.im.abs() <= tol, "off-axis point {p}");
                assert!(p.re <= -0.25 + tol, "point beyond the branch point {p}");
            }
        }
        // the ray is covered from the window edge to the branch point
        let all: Vec<Complex64> = trace.segments.concat();
        let mut x = -3.0 + cw;
        while x < -0.25 - tol {
            let z = Complex64::new(x, 0.0);
            let d = all.iter().map(|p| (p - z).norm()).fold(f64::INFINITY, f64::min);
            assert!(d <= tol, "ray point {z} not covered (distance {d})");
            x += cw;
        }
    }

    #[test]
    fn trace_k1_is_empty() {
        let cfg = LociConfig::default();
        let k1 = parse_defining("y - z").unwrap();
        let window = Window::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let trace = trace_equimodular(&k1, window, (32, 32), &cfg).unwrap();
        assert!(trace.segments.is_empty());
        assert!(trace.isolated.is_empty());
    }

    #[test]
    fn slow_growth_hand_example() {
        let cfg = LociConfig::default();
        let init = parse_initial("1, -1").unwrap();
        let (s, cands) = slow_growth_candidates(&quad(), &init, &cfg).unwrap();
        // S ∝ z²·(2−z): distinct candidate points {0, 2}
        assert_eq!(s.degree(), Some(3));
        let mut points: Vec<f64> = cands.iter().map(|(z, _)| z.re).collect();
        points.sort_by(f64::total_cmp);
        assert_eq!(cands.len(), 2);
        assert!((points[0] - 0.0).abs() < 1e-10 && (points[1] - 2.0).abs() < 1e-10);
        assert!(cands.iter().all(|(z, _)| z.im.abs() < 1e-10));

        let sigma = slow_growth_set(&quad(), &init, &cfg).unwrap();
        assert_eq!(sigma.len(), 1);
        assert!((sigma[0].0 - Complex64::new(2.0, 0.0)).norm() < 1e-10);
        assert_eq!(sigma[0].1, 1);
    }

    #[test]
    fn standard_tuple_has_empty_sigma() {
        let cfg = LociConfig::default();
        let sigma = slow_growth_set(&quad(), &InitialTuple::standard(2), &cfg).unwrap();
        assert!(sigma.is_empty());
    }

    #[test]
    fn k1_has_no_candidates() {
        let cfg = LociConfig::default();
        let k1 = parse_defining("y - z").unwrap();
        let init = parse_initial("1").unwrap();
        let (_, cands) = slow_growth_candidates(&k1, &init, &cfg).unwrap();
        assert!(cands.is_empty());
    }

    #[test]
    fn degenerate_zero_init_rejected_by_tuple_type() {
        assert!(parse_initial("0, 0").is_err());
    }

    #[test]
    fn locus_set_sigma_inside_candidates() {
        let cfg = LociConfig::default();
        let init = parse_initial("1, -1").unwrap();
        let window = Window::new(-3.0, 3.0, -2.0, 2.0).unwrap();
        let set = LocusSet::compute(&quad(), &init, window, (64, 64), &cfg).unwrap();
        for (z, _) in &set.sigma {
            assert!(
                set.candidates_s
                    .iter()
                    .any(|(c, _)| (c - z).norm() <= 1e-9 * (1.0 + z.norm())),
                "sigma point {z} not among candidates"
            );
        }
        assert_eq!(set.sigma_cardinality(), 1);
    }
}
