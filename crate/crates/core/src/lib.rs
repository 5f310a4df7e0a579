//! Exact arithmetic kernel: multivariate polynomials over Z, canonical
//! rational functions over Q, matrices over the rational-function field,
//! partial fractions, rational root finding and the expression parser.
//!
//! Every value is immutable once built and can be shared across threads.

pub mod error;
pub mod gcd;
pub mod matrix;
mod modp;
pub mod parse;
pub mod pfrac;
pub mod poly;
mod print;
pub mod ratfunc;
pub mod roots;
pub mod space;
pub mod upoly;

pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use pfrac::{partial_fractions, PartialFractions, PoleTerm};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use space::{Space, SpaceRef};
pub use upoly::UPoly;

/// Parse in the standard space, panicking on malformed input. Intended for
/// literals in code and tests.
pub fn rf(text: &str) -> RatFunc {
    RatFunc::parse(text).unwrap_or_else(|e| panic!("bad expression `{text}`: {e}"))
}

/// Index of a variable in the standard space.
pub fn var_index(name: &str) -> usize {
    Space::standard()
        .index(name)
        .unwrap_or_else(|| panic!("`{name}` is not a standard variable"))
}
