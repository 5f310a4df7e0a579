//! Gauss-Manin connections for the elliptic families with four singular
//! fibers, the rational reparametrizations that make their singular points
//! rational, and the pullback to a linear system in the fiber coordinate.

mod connection;
mod error;
mod family;
mod pullback;
mod system;

pub use connection::{cubic_connection, quartic_connection, three_point_connection, Connection, ConnectionKind};
pub use error::{Error, Result};
pub use family::{discriminant_roots, factor_cubic, herfurtner, rationalize, CubicSplit, CurveFamily, SingularPoints};
pub use pullback::pullback;
pub use system::FuchsianSystem;
