//! Approximate the dominant branch of an algebraic function at a point.
//!
//! The equation y² − y − z = 0 defines a two-valued function; at z = 6 its
//! branches take the values 3 and −2. The recursion attached to the
//! equation produces ratios r_n(6) converging geometrically to the branch
//! of larger modulus.

use ratapprox::recursion::eval_ratio;
use ratapprox::spectrum::{spectral_numbers, DEFAULT_DOMINANCE_TOL};
use ratapprox::{parse_defining, parse_initial, Complex64};

fn main() {
    let def = parse_defining("y^2 - y - z").unwrap();
    let init = parse_initial("1, 1").unwrap();
    let z = Complex64::new(6.0, 0.0);

    let report = spectral_numbers(&def, z, DEFAULT_DOMINANCE_TOL).unwrap();
    println!("branch values at z = {z}:");
    for (tau, mult) in &report.taus {
        println!("  {tau}  (multiplicity {mult}, |.| = {:.6})", tau.norm());
    }
    let y = report.y_dom.expect("dominant point");
    println!("dominant branch: {y}\n");

    println!("{:>4} {:>24} {:>12}", "n", "r_n(6)", "|r_n - y|");
    for n in [2, 4, 8, 12, 16, 20, 30, 40] {
        let r = eval_ratio(&def, &init, z, n).unwrap();
        println!("{n:>4} {:>24} {:>12.3e}", format!("{r}"), (r - y).norm());
    }
    println!(
        "\ntheoretical factor per step: |tau_2/tau_1| = {:.6}",
        report.theoretical_rate.unwrap()
    );
}
