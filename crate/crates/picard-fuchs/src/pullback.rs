use painleve_core::{var_index, Matrix, RatFunc};

use crate::connection::{Connection, ConnectionKind};
use crate::error::{Error, Result};
use crate::family::{discriminant_roots, factor_cubic, finite_singularities, CurveFamily};
use crate::system::FuchsianSystem;

/// Restrict a `(t2, t3)` connection to the curve `z -> (G2(z), G3(z))` given
/// by the family: `A(z) = A_t2(G) dG2/dz + A_t3(G) dG3/dz`.
///
/// The split connection is used exactly when the family's cubic has a
/// rational root, with `(G2, G3)` the coefficients of the quadratic factor;
/// otherwise `(G2, G3) = (g2, g3)`.
pub fn pullback(connection: &Connection, family: &CurveFamily) -> Result<FuchsianSystem> {
    let split = factor_cubic(family)?;
    let (g2, g3) = match (connection.kind(), &split) {
        (ConnectionKind::Quartic, Some(s)) => (s.g2.clone(), s.g3.clone()),
        (ConnectionKind::Cubic, None) => (family.g2().clone(), family.g3().clone()),
        (ConnectionKind::Quartic, None) => {
            return Err(Error::Pairing("the split connection needs a reducible cubic".into()))
        }
        (ConnectionKind::Cubic, Some(_)) => {
            return Err(Error::Pairing("the cubic is reducible; use the split connection".into()))
        }
        (ConnectionKind::ThreePoint, _) => {
            return Err(Error::Pairing("the three-point connection has no curve-family pullback".into()))
        }
    };
    let z = var_index("z");
    let d2 = g2.derivative(z);
    let d3 = g3.derivative(z);
    if d2.is_zero() && d3.is_zero() {
        return Err(Error::Degenerate("the family does not move with z".into()));
    }
    let bindings: Vec<(usize, RatFunc)> = vec![(var_index("t2"), g2), (var_index("t3"), g3)];
    let coeffs = connection.coefficients();
    let a2: Matrix = coeffs[0].substitute(&bindings)?.scale(&d2);
    let a3: Matrix = coeffs[1].substitute(&bindings)?.scale(&d3);
    let singularities = match discriminant_roots(family) {
        Ok(p) => p.to_vec(),
        Err(_) => finite_singularities(family).unwrap_or_default(),
    };
    FuchsianSystem::new(&a2 + &a3, "z", singularities)
}
