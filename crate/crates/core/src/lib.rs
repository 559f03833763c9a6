//! Exact computations with rings of differential operators.
//!
//! The crate works in the Weyl algebra `A_n = Q<x_1..x_n, d_1..d_n>` and the
//! cyclic modules `M = A_n / I` it acts on. It provides
//!
//! - normal-form arithmetic, the action on polynomials, degrees and principal
//!   symbols ([`weyl`]),
//! - a text syntax for operators ([`parser`]),
//! - exact dimensions of filtration steps of `M` ([`filtration`]),
//! - Hilbert-polynomial fitting and the module dimension `d(M)` ([`hilbert`]),
//! - mechanical checks of the operator identities behind the inequality
//!   `d(M) >= n`, and a corpus runner for it ([`lab`], [`corpus`]).

pub mod corpus;
pub mod error;
pub mod filtration;
pub mod hilbert;
pub mod lab;
pub mod linalg;
pub mod parser;
pub mod rational;
pub mod report;
pub mod weyl;

pub use error::{Error, ParseError, Result};
pub use rational::Rational;
pub use weyl::{
    Degree, DiffOp, ExponentPair, Filtration, Monomial, Polynomial, SymbolPoly, Truncation,
};
