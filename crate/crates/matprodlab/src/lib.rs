//! Exact analysis of inhomogeneous right-products of nonnegative matrices.
//!
//! The crate revolves around three layers:
//!
//! * exact linear algebra over arbitrary-precision rationals
//!   ([`exactmat`]), the projective metric and contraction coefficients
//!   ([`projective`]), and the matrix classes `H1`, `H2(Λ)`, `H3(λ)`
//!   with their composition calculus ([`hclass`]);
//! * the dominant-column engine ([`condc`]): cut sequences, block
//!   products, condition-(C) witnesses and certified finite-horizon
//!   estimates of the projective column limits;
//! * worked measure families built on top of the engine: linearly
//!   representable measures ([`repmeasure`]), the Kamae measure
//!   ([`kamae`]), a Bernoulli convolution for the Pisot root of
//!   `x^3 = 2x^2 - x + 1` ([`betaconv`]), the word language machinery
//!   that certifies condition (C) for that family ([`langw`]), and a
//!   gallery of small worked examples ([`gallery`]).
//!
//! Everything measure-theoretic is computed in exact rational
//! arithmetic; floating point appears only in explicitly numeric
//! diagnostics (logarithms, singular values, convergence tables).
//!
//! See the `examples/` directory for one runnable program per major
//! capability, and the `matprodlab` binary for the command-line
//! interface.

pub mod betaconv;
pub mod cli;
pub mod condc;
pub mod exactmat;
pub mod gallery;
pub mod hclass;
pub mod kamae;
pub mod langw;
pub mod numeric;
pub mod projective;
pub mod repmeasure;

mod workers;

pub use exactmat::{ExactMatrix, Rational, SupportPattern};
pub use hclass::HClassProfile;
pub use projective::ExtendedLogValue;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero matrix not allowed: {0}")]
    ZeroMatrix(String),
    #[error("zero vector not allowed: {0}")]
    ZeroVector(String),
    #[error("matrix is not in H1: {0}")]
    NotH1(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
