//! Painleve VI in Hamiltonian form, a registry of its known algebraic
//! solutions, and the derivation of those solutions from Picard-Fuchs
//! systems of elliptic families.

mod error;
pub mod fixtures;
mod hamiltonian;
mod linear;
mod pipeline;
mod registry;
mod relation;
pub mod suite;

pub use error::{Error, Result};
pub use hamiltonian::{hamiltonian, kappa, verify_solution, verify_row, PVIResidual, RowVerification};
pub use linear::linear_ode;
pub use pipeline::{convolve, convolve_pvi, derive, derive_row, family_system, Derivation};
pub use registry::{solution_row, table1, ConvolutionLink, Table1Entry, Table1Row};
pub use relation::{check_relation, quartic_relation, reducibility_limit};
