//! Rank-two Fuchsian systems `DY = sum Q_i/(z - t_i) Y` with three finite
//! singular points, their normalization to `(t, 0, 1)`, and the dictionary
//! between normalized systems and Painleve VI data `(theta, lambda, mu, t)`.

mod error;
mod file;
mod pvi;
mod system;

pub use error::{Error, Result};
pub use file::{from_json, to_json, SchlesingerFile};
pub use pvi::{build_from_pvi, extract_pvi, extract_pvi_with_gauge, PVIData};
pub use system::{
    diagonalize_infinity, invert_coordinate, normalize_moebius, scalar_twist, swap_coordinates, to_schlesinger, SchlesingerSystem,
};
