//! Middle convolution of Fuchsian systems `DY = sum A_i/(z - t_i) Y`:
//! the Okubo system, its two invariant subspaces, the quotient system and
//! the effect on the Painleve VI parameters of rank-two inputs.

mod error;
mod okubo;
mod quotient;

pub use error::{Error, Result};
pub use okubo::{invariant_subspaces, okubo_build, OkuboSystem, Subspaces};
pub use quotient::{
    mc_parameters, mc_quotient, mc_to_schlesinger, middle_convolution, residue_spectra, ConvolutionResult,
};
