//! Exact arithmetic in the Weyl algebra `A_n` over the rationals.

mod diffop;
mod monomial;
mod polynomial;
mod symbol;

pub use diffop::{Degree, DiffOp, Filtration};
pub use monomial::{degrevlex, exponents_of_degree, total_degree, ExponentPair, Monomial};
pub use polynomial::{Polynomial, Truncation};
pub use symbol::SymbolPoly;
