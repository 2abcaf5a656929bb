//! Property tests for the algebraic substrate and the recursion layer.

use proptest::prelude::*;
use ratapprox::algfun::{parse_defining, DefiningPolynomial, InitialTuple};
use ratapprox::poly::Poly;
use ratapprox::ratfun::RatFun;
use ratapprox::recursion::{eval_ratio, generate_exact};
use ratapprox::resultant::resultant;
use ratapprox::roots::{poly_roots, RootConfig};
use ratapprox::scalar::{Complex64, GaussRat};

fn zpoly(coeffs: &[i64]) -> Poly<GaussRat> {
    Poly::from_i64(coeffs)
}

fn lift(p: &Poly<GaussRat>) -> Poly<Poly<GaussRat>> {
    Poly::new(p.coeffs().iter().cloned().map(Poly::constant).collect())
}

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The resultant vanishes exactly when the gcd is nonconstant.
    #[test]
    fn resultant_vanishes_iff_gcd_nontrivial(a in small_poly(), b in small_poly(), c in small_poly()) {
        let pa = zpoly(&a);
        let pb = zpoly(&b);
        let pc = zpoly(&c);
        prop_assume!(!pa.is_zero() && !pb.is_zero());
        // direct pair
        let res = resultant(&lift(&pa), &lift(&pb)).unwrap();
        let g = pa.gcd(&pb).unwrap();
        prop_assert_eq!(res.is_zero(), g.degree().is_some_and(|d| d >= 1));
        // pair with a planted common factor
        if pc.degree().is_some_and(|d| d >= 1) {
            let res = resultant(&lift(&pa.mul(&pc)), &lift(&pb.mul(&pc))).unwrap();
            prop_assert!(res.is_zero());
        }
    }

    /// Exact rational-function arithmetic is reversible: (a·b)/b = a.
    #[test]
    fn ratfun_product_division_round_trip(
        an in small_poly(), ad in small_poly(),
        bn in small_poly(), bd in small_poly(),
    ) {
        let (an, ad, bn, bd) = (zpoly(&an), zpoly(&ad), zpoly(&bn), zpoly(&bd));
        prop_assume!(!ad.is_zero() && !bd.is_zero() && !bn.is_zero());
        let a = RatFun::new(an, ad).unwrap();
        let b = RatFun::new(bn.clone(), bd.clone()).unwrap();
        let prod = a.mul(&b);
        let back = RatFun::new(prod.num().mul(&bd), prod.den().mul(&bn)).unwrap();
        prop_assert_eq!(back, a);
    }

    /// Rendering a defining polynomial and re-parsing reproduces the exact
    /// coefficient list.
    #[test]
    fn defining_polynomial_render_round_trip(
        rows in prop::collection::vec(
            prop::collection::vec((-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9), 1..=3),
            2..=4,
        ),
    ) {
        let coeffs: Vec<Poly<GaussRat>> = rows
            .iter()
            .map(|row| {
                Poly::new(
                    row.iter()
                        .map(|&(rn, rd, im, id)| GaussRat::from_parts(rn, rd, im, id))
                        .collect(),
                )
            })
            .collect();
        prop_assume!(coeffs.last().is_some_and(|c| !c.is_zero()));
        prop_assume!(coeffs.len() >= 2);
        let def = DefiningPolynomial::new(coeffs).unwrap();
        let rendered = def.render_equation();
        let reparsed = parse_defining(&rendered).unwrap();
        prop_assert_eq!(def, reparsed);
    }

    /// Every reported root satisfies the backward-error bound.
    #[test]
    fn roots_satisfy_backward_error(coeffs in prop::collection::vec(-2.0f64..=2.0, 3..=13)) {
        let p = Poly::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect());
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let roots = poly_roots(&p, &RootConfig::default()).unwrap();
        let deg = p.degree().unwrap();
        prop_assert_eq!(roots.iter().map(|r| r.1).sum::<usize>(), deg);
        for (r, _) in &roots {
            let scale: f64 = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| c.norm() * r.norm().powi(j as i32))
                .sum();
            prop_assert!(p.eval(r).norm() <= 1e-10 * scale.max(1e-300));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The numeric window iteration agrees with the exact rational
    /// functions wherever both are defined.
    #[test]
    fn exact_and_numeric_ratios_agree(
        re in -1.5f64..=1.5,
        im in -1.5f64..=1.5,
        q0 in small_poly(),
        q1 in small_poly(),
    ) {
        let def = parse_defining("y^2 - y - z").unwrap();
        let p0 = zpoly(&q0);
        let p1 = zpoly(&q1);
        prop_assume!(!p0.is_zero() || !p1.is_zero());
        let init = InitialTuple::from_polys(vec![p0, p1]).unwrap();
        let seq = generate_exact(&def, &init, 12).unwrap();
        let z = Complex64::new(re, im);
        for n in 2..=12 {
            let exact = match seq.ratio_function(n) {
                Ok(r) => r,
                Err(_) => continue, // q_{n-1} identically zero
            };
            let den = exact.den().eval_complex(z);
            if den.norm() < 1e-6 {
                continue; // too close to a pole for a fair comparison
            }
            let ev = exact.eval(z);
            match eval_ratio(&def, &init, z, n) {
                Ok(numeric) => {
                    prop_assert!(
                        (ev - numeric).norm() <= 1e-9 * (1.0 + ev.norm()),
                        "n = {}: exact {} vs numeric {}", n, ev, numeric
                    );
                }
                Err(_) => {} // exact zero of q_n(z) hit by the iteration
            }
        }
    }
}
