//! Compare the empirically fitted convergence rate of r_n(z) with the
//! spectral prediction |tau_2/tau_1| at several points of the plane.

use ratapprox::experiments::fit_geometric_rate;
use ratapprox::recursion::eval_ratio;
use ratapprox::spectrum::{dominant_root, spectral_numbers, DEFAULT_DOMINANCE_TOL};
use ratapprox::{parse_defining, parse_initial, Complex64};

fn main() {
    let def = parse_defining("(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)").unwrap();
    let init = parse_initial("0, 0, 1").unwrap();

    println!(
        "{:>22} {:>12} {:>12} {:>10}",
        "z", "fitted", "predicted", "dev %"
    );
    for z in [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.5, 1.5),
        Complex64::new(-2.0, -1.0),
        Complex64::new(3.0, 2.0),
    ] {
        let y = dominant_root(&def, z, DEFAULT_DOMINANCE_TOL).unwrap();
        let predicted = spectral_numbers(&def, z, DEFAULT_DOMINANCE_TOL)
            .unwrap()
            .theoretical_rate
            .unwrap();
        let samples: Vec<(usize, f64)> = (10..=40)
            .map(|n| (n, (eval_ratio(&def, &init, z, n).unwrap() - y).norm()))
            .collect();
        match fit_geometric_rate(&samples) {
            Some(fitted) => println!(
                "{:>22} {fitted:>12.6} {predicted:>12.6} {:>10.2}",
                format!("{z}"),
                100.0 * (fitted - predicted).abs() / predicted
            ),
            None => println!("{:>22} converged below float noise", format!("{z}")),
        }
    }
}
