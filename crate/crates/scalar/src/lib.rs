//! Second-order Fuchsian equations `y'' + p1 y' + p2 y = 0`: reduction of a
//! 2x2 system to one coordinate, the SL form `y'' = p y`, Riemann schemes,
//! apparent singularities and the accessory parameters of the four-point
//! template with one apparent point.

mod accessory;
mod apparent;
mod error;
mod ode;
mod scheme;
mod util;

pub use accessory::{accessory_parameters, momentum_from_accessory, template_potential, AccessoryData, ThetaChoice};
pub use apparent::{apparent_singularities, ApparentPoint};
pub use error::{Error, Result};
pub use ode::{sl_form, system_to_scalar, Coordinate, ScalarOde, SlForm};
pub use scheme::{riemann_scheme, RiemannScheme, SchemePoint};
pub use util::limit_at_infinity;
