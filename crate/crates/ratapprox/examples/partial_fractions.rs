//! Every approximant is the Cauchy transform of its residue distribution
//! (plus a polynomial part): rebuild r_10 from its poles and Laurent data
//! and measure the reconstruction residual at probe points.

use ratapprox::poles::{cauchy_reconstruct, poles_and_residues};
use ratapprox::recursion::generate_exact;
use ratapprox::roots::RootConfig;
use ratapprox::{parse_defining, InitialTuple};

fn main() {
    let def = parse_defining("(z+1)*y^3 = (z^2+1)*y^2 + (z-5*I)*y + (z^3-1-I)").unwrap();
    let init = InitialTuple::standard(3);
    let cfg = RootConfig::default();

    let seq = generate_exact(&def, &init, 10).unwrap();
    let r10 = seq.ratio_function(10).unwrap();
    println!(
        "r_10 = N/D with deg N = {:?}, deg D = {:?}",
        r10.num().degree(),
        r10.den().degree()
    );

    let rf = r10.to_float();
    let report = poles_and_residues(&rf, 10, &cfg).unwrap();
    println!("poles ({} total order):", report.total_pole_order());
    for p in &report.poles {
        println!(
            "  {}  order {}  residue {:.6}",
            p.location,
            p.order,
            p.laurent[0]
        );
    }
    println!(
        "polynomial part degree: {:?}",
        report.polynomial_part.degree()
    );

    let residual = cauchy_reconstruct(&report, &rf).unwrap();
    println!("\nmax relative reconstruction residual over 20 probes: {residual:.3e}");
}
