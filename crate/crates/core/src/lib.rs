//! Exact-arithmetic engine for centralizers of U_q(sl2) in threefold tensor
//! products and for quotients of the Askey-Wilson algebra.
//!
//! Everything is computed over the field Q(v) of rational functions in
//! v = q^{1/2} with arbitrary-precision rational coefficients; identities are
//! either verified symbolically (EXACT) or at random rational sample points
//! (SAMPLED). No floating point anywhere.

pub mod aw;
pub mod centralizer;
pub mod diagram;
pub mod halfint;
pub mod matrices;
pub mod nc;
pub mod quantum;
pub mod quotient;
pub mod report;
pub mod representations;
pub mod scalars;
pub mod spins;

pub use halfint::{HalfInt, SpinTriple};
pub use matrices::{ExactMatrix, Matrix};
pub use scalars::{chi, chi_tilde, qint, LaurentPoly, SampleGen, SamplePoint, Scalar};

use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A denominator vanished at the chosen sample point; resample.
    #[error("denominator vanishes at the sample point")]
    PoleAtSample,
    /// A genuine pole at v = 1 survived canonicalization.
    #[error("pole at q = 1")]
    PoleAtOne,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("invalid spin: {0}")]
    InvalidSpin(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    /// No candidate R-matrix normalization passed the intertwining contract.
    #[error("no R-matrix convention passed validation for spins ({0}, {1})")]
    ConventionNotFound(HalfInt, HalfInt),
    /// A candidate spanning set failed to close at the working truncation.
    #[error("span not closed at truncation: {generator} * {word} leaves the span")]
    NotClosedAtTruncation { generator: String, word: String },
    #[error("{0} is not in J(j1,j2,j3)")]
    NotInJ123(HalfInt),
    #[error("matrix is singular")]
    Singular,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
