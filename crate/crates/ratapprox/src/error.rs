//! Error types, one enum per subsystem.

use crate::spectrum::SpectrumReport;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumError {
    #[error("DegreeZero: polynomial is constant, no roots to extract")]
    DegreeZero,
    #[error("NonConvergence: root iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: u32 },
    #[error("BothZero: gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("EmptyInput: resultant requires two nonzero polynomials")]
    EmptyInput,
    #[error("DegreeTooLow: discriminant requires degree >= 2, got {degree}")]
    DegreeTooLow { degree: usize },
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("SyntaxError at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("NotBivariate at byte {pos}: unexpected variable '{name}' (only y, z, I are allowed)")]
    NotBivariate { pos: usize, name: String },
    #[error("ZeroLeadingCoefficient: no nonzero coefficient of a positive power of y")]
    ZeroLeadingCoefficient,
    #[error("DivisionByZero at byte {pos}: divisor simplifies to zero")]
    DivisionByZero { pos: usize },
    #[error("NonPolynomial: defining equation has y in a denominator")]
    NonPolynomial,
    #[error("InitNotFunctionOfZ: initial tuple entry depends on y")]
    InitNotFunctionOfZ,
    #[error("ZeroDenominator: rational function denominator is identically zero")]
    ZeroDenominator,
    #[error("EmptyInitialTuple: at least one entry must be nonzero")]
    EmptyInitialTuple,
}

#[derive(Debug, Error)]
pub enum RecursionError {
    #[error("InitLengthMismatch: expected {expected} initial entries, got {got}")]
    InitLengthMismatch { expected: usize, got: usize },
    #[error("ZeroDenominatorSequence: q_{n} is identically zero, ratio undefined")]
    ZeroDenominatorSequence { n: usize },
    #[error("PoleLocusPoint: z = {z} lies on the pole locus")]
    PoleLocusPoint { z: String },
    #[error("IndeterminateRatio: q_{n}(z) = 0 at z = {z}")]
    IndeterminateRatio { n: usize, z: String },
    #[error("IndexOutOfRange: n = {n} outside the generated range {max}")]
    IndexOutOfRange { n: usize, max: usize },
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("PoleOfCoefficients: P_k vanishes at z = {z}")]
    PoleOfCoefficients { z: String },
    #[error("NotDominantPoint: spectrum at z = {} is {:?}", .report.z, .report.class)]
    NotDominantPoint { report: Box<SpectrumReport> },
    #[error("PoleLocusPoint: z = {z} lies on the pole locus")]
    PoleLocusPoint { z: String },
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Error)]
pub enum LociError {
    #[error("EmptyWindow: window has nonpositive extent")]
    EmptyWindow,
    #[error("GridTooCoarse: grid must be at least 8x8, got {nx}x{ny}")]
    GridTooCoarse { nx: usize, ny: usize },
    #[error("DegreeTooLow: branching points require k >= 2")]
    DegreeTooLow,
    #[error("IdenticallyZeroMu: the slow-growth pairing vanishes identically (degenerate initial tuple)")]
    IdenticallyZeroMu,
    #[error("ResultantIdenticallyZero: symbol and pairing share a factor; candidate set is not finite")]
    ResultantIdenticallyZero,
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Error)]
pub enum PolesError {
    #[error("ProbeTooClose: could not place probe points away from poles after {attempts} attempts")]
    ProbeTooClose { attempts: u32 },
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Recursion(#[from] RecursionError),
    #[error(transparent)]
    Loci(#[from] LociError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Poles(#[from] PolesError),
    #[error("Io: {0}")]
    Io(#[from] std::io::Error),
}
