//! Exact verification engine for the two-mode boson realization of
//! sp(4,R) and its two q-deformations.
//!
//! Layers, bottom-up: [`qnum`] (exact scalars in `s = q^(1/4)`), [`fock`]
//! (basis bookkeeping), [`ops`] (sparse operators with reach metadata),
//! [`algebras`] (generators, Casimirs, the relation catalog) and [`verify`]
//! (checks and reports). [`render`] draws the basis pyramids.

pub mod algebras;
pub mod fock;
pub mod ops;
pub mod qnum;
pub mod render;
pub mod verify;

use fock::FockState;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum Error {
    #[error("q must be positive and finite, got {0}")]
    NonPositiveQ(f64),
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("exponent {0} is not a multiple of 1/4")]
    NotQuarterInteger(String),
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("triple labels are defined on even-parity states only, got {0}")]
    OddParity(FockState),
    #[error("triple ({n1},{n0},{nm1}) violates the {convention} convention")]
    InvalidTriple { n1: u32, n0: u32, nm1: u32, convention: String },
    #[error("cutoff {cutoff} too small, need at least {required}")]
    CutoffTooSmall { cutoff: u32, required: u32 },
    #[error("operators act on different spaces")]
    SpaceMismatch,
    #[error("operators use different bracket arithmetic (deformed vs classical)")]
    DeformationMismatch,
    #[error("cannot add operators with and without the sqrt([2]) factor")]
    Root2Mismatch,
    #[error("operator is not diagonal: entry {src} -> {dst}")]
    NotDiagonal { src: FockState, dst: FockState },
    #[error("generator family mismatch: expected {expected}, got {got}")]
    FamilyMismatch { expected: String, got: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("unknown relation {0}")]
    UnknownRelation(String),
    #[error("state {0} lies outside the space")]
    StateOutOfSpace(FockState),
}

pub type Result<T> = std::result::Result<T, Error>;
