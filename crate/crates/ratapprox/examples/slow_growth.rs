//! The set of slow growth: points where the initial tuple loses its
//! component along the dominant eigendirection, so q_n grows slower than
//! the dominant power and the approximants pick up spurious poles nearby.
//!
//! The candidate set 𝒮 comes from one exact resultant; the slow-growth
//! criterion then filters it. With the standard initial tuple {0,...,0,1}
//! the set is provably empty.

use ratapprox::loci::{slow_growth_candidates, slow_growth_set, LociConfig};
use ratapprox::spectrum::{limit_g, DEFAULT_DOMINANCE_TOL};
use ratapprox::{parse_defining, parse_initial, InitialTuple};

fn main() {
    let cfg = LociConfig::default();

    // hand-checkable case: q_n = (-1)^n at z = 2 while the dominant root is 2
    let def = parse_defining("y^2 - y - z").unwrap();
    let init = parse_initial("1, -1").unwrap();
    let (s_poly, candidates) = slow_growth_candidates(&def, &init, &cfg).unwrap();
    println!("quadratic, init {{1, -1}}:");
    println!("  S(z) has degree {:?}", s_poly.degree());
    println!("  candidates 𝒮: {:?}", candidates.iter().map(|(z, m)| format!("{z} (m={m})")).collect::<Vec<_>>());
    let sigma = slow_growth_set(&def, &init, &cfg).unwrap();
    println!("  Σ: {:?}", sigma.iter().map(|(z, m)| format!("{z} (m={m})")).collect::<Vec<_>>());
    for (z, _) in &sigma {
        let g = limit_g(&def, &init, *z, DEFAULT_DOMINANCE_TOL).unwrap();
        println!("  limit g({z}) = {g} (vanishes: slow growth confirmed)");
    }

    // standard tuple: no slow growth, hence no spurious poles, ever
    let sigma_std = slow_growth_set(&def, &InitialTuple::standard(2), &cfg).unwrap();
    println!("\nquadratic, standard init: Σ = {sigma_std:?} (always empty)");

    // the three-branch equation with a quintic initial tuple: eight points
    let def = parse_defining("(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)").unwrap();
    let init = parse_initial("z^5+I*z^2-5, z^3-z+I, 1").unwrap();
    let sigma = slow_growth_set(&def, &init, &cfg).unwrap();
    println!("\nthree-branch equation, quintic tuple:");
    println!("  |Σ| = {} (total multiplicity {})", sigma.len(), sigma.iter().map(|s| s.1).sum::<usize>());
    for (z, m) in &sigma {
        println!("  {z} (m={m})");
    }
}
