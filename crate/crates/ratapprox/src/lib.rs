//! Rational approximation of the dominant branch of an algebraic function.
//!
//! Given a bivariate polynomial equation `P(y, z) = 0`, the coefficients
//! `P_i(z)` induce a linear recursion of length `k+1` over rational functions
//! of `z`. Starting from any initial `k`-tuple, the consecutive ratios
//! `r_n = q_n/q_{n-1}` converge to the root of `P(·, z)` of maximal modulus,
//! away from three explicitly computable exceptional sets:
//!
//! * the equimodular discriminant `Ξ` (curves where two top-modulus roots
//!   tie), traced by [`loci::trace_equimodular`];
//! * the pole locus `Υ` (zeros of `P_k` and poles of the initial tuple);
//! * the finite set of slow growth `Σ`, the attractor of spurious poles,
//!   computed exactly via a resultant ([`loci::slow_growth_candidates`]).
//!
//! The [`poles`] module classifies the poles of each approximant against
//! those sets, and [`experiments`] applies the machinery to a four-term
//! recurrence family whose zero reality depends on a real parameter.
//!
//! Entry points: parse an equation with [`algfun::parse_defining`], evaluate
//! approximants with [`recursion::eval_ratio`], or run the `ratapprox`
//! binary (see the README and `examples/`).

pub mod algfun;
pub mod cli;
pub mod emit;
pub mod error;
pub mod experiments;
pub mod loci;
pub mod poles;
pub mod poly;
pub mod ratfun;
pub mod recursion;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod spectrum;

pub use algfun::{parse_defining, parse_initial, DefiningPolynomial, InitialTuple};
pub use loci::{LociConfig, LocusSet, Window};
pub use poles::{PoleClass, PoleReport};
pub use poly::Poly;
pub use ratfun::RatFun;
pub use recursion::{eval_ratio, generate_exact, SequenceRep};
pub use roots::{poly_roots, poly_roots_exact, RootConfig};
pub use scalar::{Complex64, GaussRat};
pub use spectrum::{dominant_root, limit_g, spectral_numbers, DominanceClass, SpectrumReport};
