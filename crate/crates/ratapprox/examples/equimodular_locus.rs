//! Trace the equimodular discriminant — the curves where the two largest
//! branch moduli tie — for two equations, and write SVG/CSV pictures.
//!
//! For y² − y − z the set is the real ray z ≤ −1/4 ending at the branching
//! point −1/4; the three-branch equation produces genuine curve segments
//! anchored at its branching points.

use ratapprox::emit::{locus_svg_layers, write_output, SvgPlot};
use ratapprox::loci::{LociConfig, LocusSet, Window};
use ratapprox::{parse_defining, InitialTuple};
use std::path::Path;

fn main() {
    let out = Path::new("out/examples");
    let cfg = LociConfig::default();

    for (name, eq, window) in [
        ("quadratic", "y^2 - y - z", Window::new(-3.0, 1.0, -1.0, 1.0).unwrap()),
        (
            "three_branch",
            "(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)",
            Window::new(-2.5, 2.5, -2.5, 2.5).unwrap(),
        ),
    ] {
        let def = parse_defining(eq).unwrap();
        let init = InitialTuple::standard(def.k());
        let set = LocusSet::compute(&def, &init, window, (256, 256), &cfg).unwrap();
        println!(
            "{name}: {} segment(s), {} isolated point(s), {} branching point(s)",
            set.xi_segments.len(),
            set.xi_isolated.len(),
            set.delta_t.len()
        );
        for (i, seg) in set.xi_segments.iter().enumerate() {
            println!(
                "  segment {i}: {} vertices, from {} to {}",
                seg.len(),
                seg.first().unwrap(),
                seg.last().unwrap()
            );
        }
        let mut plot = SvgPlot::new(window, 640.0);
        plot.axes();
        locus_svg_layers(&mut plot, &set);
        let svg = out.join(format!("equimodular_{name}.svg"));
        write_output(&svg, &plot.finish(), true).unwrap();
        println!("  wrote {}\n", svg.display());
    }
}
