//! CSV and SVG emitters. Output is deterministic: inputs arrive sorted and
//! floats print with the shortest round-trip representation, so repeated
//! runs of the same configuration produce byte-identical files.

use crate::loci::{LocusSet, Window};
use crate::poles::{PoleClass, PoleReport};
use crate::scalar::Complex64;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

pub const LOCUS_CSV_HEADER: &str = "set_tag,re,im,order_or_mult,aux,class";
pub const POLE_CSV_HEADER: &str = "n,re,im,order,abs_residue,class";

pub fn class_name(class: PoleClass) -> &'static str {
    match class {
        PoleClass::Fixed => "fixed",
        PoleClass::Regular => "regular",
        PoleClass::Spurious => "spurious",
        PoleClass::Unclassified => "unclassified",
    }
}

/// One row per locus point: `set_tag,re,im,order_or_mult,aux,class`.
/// For `xi` rows `order_or_mult` is the segment index and `aux` the vertex
/// index along it.
pub fn locus_csv(set: &LocusSet) -> String {
    let mut out = String::new();
    writeln!(out, "{LOCUS_CSV_HEADER}").unwrap();
    for (si, seg) in set.xi_segments.iter().enumerate() {
        for (pi, p) in seg.iter().enumerate() {
            writeln!(out, "xi,{},{},{},{},", p.re, p.im, si, pi).unwrap();
        }
    }
    for p in &set.xi_isolated {
        writeln!(out, "xi_isolated,{},{},1,0,", p.re, p.im).unwrap();
    }
    for p in &set.upsilon {
        writeln!(out, "upsilon,{},{},1,0,", p.re, p.im).unwrap();
    }
    for p in &set.delta_t {
        writeln!(out, "delta,{},{},1,0,", p.re, p.im).unwrap();
    }
    for (p, m) in &set.candidates_s {
        writeln!(out, "candidate,{},{},{},0,", p.re, p.im, m).unwrap();
    }
    for (p, m) in &set.sigma {
        writeln!(out, "sigma,{},{},{},0,", p.re, p.im, m).unwrap();
    }
    out
}

/// One row per pole: `n,re,im,order,abs_residue,class`.
pub fn pole_csv(reports: &[&PoleReport]) -> String {
    let mut out = String::new();
    writeln!(out, "{POLE_CSV_HEADER}").unwrap();
    for report in reports {
        for p in &report.poles {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                report.n,
                p.location.re,
                p.location.im,
                p.order,
                p.laurent.first().map_or(0.0, |a| a.norm()),
                class_name(p.class)
            )
            .unwrap();
        }
    }
    out
}

/// Rows of labelled points (used for polynomial zeros in the experiments).
pub fn points_csv(rows: &[(&str, &[Complex64])]) -> String {
    let mut out = String::new();
    writeln!(out, "{LOCUS_CSV_HEADER}").unwrap();
    for (tag, pts) in rows {
        for p in pts.iter() {
            writeln!(out, "{},{},{},1,0,", tag, p.re, p.im).unwrap();
        }
    }
    out
}

/// Minimal self-contained SVG scatter/curve plot over a complex window.
/// The vertical axis is flipped so the picture has the usual mathematical
/// orientation.
pub struct SvgPlot {
    window: Window,
    width: f64,
    height: f64,
    body: String,
}

impl SvgPlot {
    pub fn new(window: Window, width_px: f64) -> Self {
        let height_px = width_px * window.height() / window.width();
        let mut body = String::new();
        write!(
            body,
            r##"<rect x="0" y="0" width="{width_px}" height="{height_px}" fill="white" stroke="#888" stroke-width="1"/>"##
        )
        .unwrap();
        SvgPlot {
            window,
            width: width_px,
            height: height_px,
            body,
        }
    }

    fn map(&self, z: Complex64) -> (f64, f64) {
        let x = (z.re - self.window.re_min) / self.window.width() * self.width;
        let y = (self.window.im_max - z.im) / self.window.height() * self.height;
        (x, y)
    }

    pub fn axes(&mut self) {
        let (x0, y0) = self.map(Complex64::new(0.0, 0.0));
        if (0.0..=self.width).contains(&x0) {
            write!(
                self.body,
                r##"<line x1="{x0:.2}" y1="0" x2="{x0:.2}" y2="{:.2}" stroke="#ddd" stroke-width="1"/>"##,
                self.height
            )
            .unwrap();
        }
        if (0.0..=self.height).contains(&y0) {
            write!(
                self.body,
                r##"<line x1="0" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="#ddd" stroke-width="1"/>"##,
                self.width
            )
            .unwrap();
        }
    }

    pub fn polyline(&mut self, pts: &[Complex64], stroke: &str, width: f64) {
        if pts.len() < 2 {
            return;
        }
        let coords: Vec<String> = pts
            .iter()
            .map(|p| {
                let (x, y) = self.map(*p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        write!(
            self.body,
            r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#,
            coords.join(" ")
        )
        .unwrap();
    }

    pub fn circle(&mut self, z: Complex64, r_px: f64, fill: &str) {
        if !self.window.contains(z) {
            return;
        }
        let (x, y) = self.map(z);
        write!(
            self.body,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r_px}" fill="{fill}"/>"#
        )
        .unwrap();
    }

    pub fn ring(&mut self, z: Complex64, r_px: f64, stroke: &str) {
        if !self.window.contains(z) {
            return;
        }
        let (x, y) = self.map(z);
        write!(
            self.body,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r_px}" fill="none" stroke="{stroke}" stroke-width="1.2"/>"#
        )
        .unwrap();
    }

    pub fn cross(&mut self, z: Complex64, half_px: f64, stroke: &str) {
        if !self.window.contains(z) {
            return;
        }
        let (x, y) = self.map(z);
        write!(
            self.body,
            r#"<path d="M {x0:.2} {y0:.2} L {x1:.2} {y1:.2} M {x0:.2} {y1:.2} L {x1:.2} {y0:.2}" stroke="{stroke}" stroke-width="1.4" fill="none"/>"#,
            x0 = x - half_px,
            x1 = x + half_px,
            y0 = y - half_px,
            y1 = y + half_px,
        )
        .unwrap();
    }

    pub fn finish(self) -> String {
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.2} {h:.2}" "#,
                r#"width="{w:.2}" height="{h:.2}">{body}</svg>"#,
                "\n"
            ),
            w = self.width,
            h = self.height,
            body = self.body
        )
    }
}

/// Standard rendering of a locus set: Ξ polylines, Υ as large dots, Δ as
/// medium dots, Σ as crosses.
pub fn locus_svg_layers(plot: &mut SvgPlot, set: &LocusSet) {
    for seg in &set.xi_segments {
        plot.polyline(seg, "#2569bd", 1.6);
    }
    for p in &set.xi_isolated {
        plot.circle(*p, 2.0, "#2569bd");
    }
    for p in &set.upsilon {
        plot.circle(*p, 6.0, "#111111");
    }
    for p in &set.delta_t {
        plot.circle(*p, 4.0, "#444444");
    }
    for (p, _) in &set.sigma {
        plot.cross(*p, 4.5, "#c41616");
    }
}

pub fn pole_svg_layer(plot: &mut SvgPlot, report: &PoleReport) {
    for p in &report.poles {
        let color = match p.class {
            PoleClass::Fixed => "#111111",
            PoleClass::Regular => "#1c8a3c",
            PoleClass::Spurious => "#c41616",
            PoleClass::Unclassified => "#b87b18",
        };
        plot.ring(p.location, 2.6, color);
    }
}

/// Writes a file, refusing to overwrite unless `force` is set.
pub fn write_output(path: &Path, contents: &str, force: bool) -> io::Result<()> {
    if path.exists() && !force {
        return Err(io::Error::new(
            io::ErrorKind::AlreadyExists,
            format!("{} exists; pass --force to overwrite", path.display()),
        ));
    }
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, contents)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_is_self_contained() {
        let window = Window::new(-2.0, 2.0, -1.0, 1.0).unwrap();
        let mut plot = SvgPlot::new(window, 400.0);
        plot.axes();
        plot.polyline(
            &[Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.5)],
            "#123456",
            1.0,
        );
        plot.circle(Complex64::new(0.0, 0.0), 3.0, "#000");
        let svg = plot.finish();
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("polyline"));
        assert!(!svg.contains("class=")); // inline styles only
    }

    #[test]
    fn overwrite_guard() {
        let dir = std::env::temp_dir().join("ratapprox_emit_test");
        let _ = std::fs::remove_dir_all(&dir);
        let path = dir.join("out.csv");
        write_output(&path, "a\n", false).unwrap();
        assert!(write_output(&path, "b\n", false).is_err());
        write_output(&path, "b\n", true).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "b\n");
        let _ = std::fs::remove_dir_all(&dir);
    }
}
