//! Zeros of consecutive polynomials from a recursion with polynomial
//! coefficients interlace along the equimodular curves: project both zero
//! sets onto the traced curves and check that they alternate in arclength.
//!
//! The system here is the four-term recursion
//! p_{n+1} = (z+1−I)p_n + (z+1)(z−I)p_{n−1} + (z³+10)p_{n−2}
//! with p_0 = z⁶−z⁴+I, p_1 = z−I+2, p_2 = (2+I)z²−8.

use ratapprox::experiments::reproduce_figure3;
use ratapprox::loci::LociConfig;
use std::path::Path;

fn main() {
    let out = Path::new("out/examples");
    let cfg = LociConfig::default();
    for n in [20usize, 40] {
        let summary = reproduce_figure3(n, (256, 256), out, true, &cfg).unwrap();
        println!(
            "n = {n}: {} and {} zeros, interlacing along the traced curves: {:?}",
            summary.zero_counts.0, summary.zero_counts.1, summary.interlacing
        );
        for f in &summary.files {
            println!("  wrote {}", f.display());
        }
    }
}
