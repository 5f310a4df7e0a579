use painleve_core::roots::split_roots;
use painleve_core::{rf, RatFunc};

use crate::error::{Error, Result};
use crate::ode::ScalarOde;

/// A zero of order `order` of the off-diagonal entry away from the singular
/// points. The local exponents there are `0` and `order + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApparentPoint {
    pub location: RatFunc,
    pub order: u32,
}

impl ApparentPoint {
    pub fn exponents(&self) -> [RatFunc; 2] {
        [rf("0"), RatFunc::from_int(self.location.space(), self.order as i64 + 1)]
    }
}

/// Zeros of the tracked off-diagonal entry. A zero at one of `singular` is
/// reported as an error instead of being merged into the singular point.
pub fn apparent_singularities(ode: &ScalarOde, singular: &[RatFunc]) -> Result<Vec<ApparentPoint>> {
    let q = ode.off_diagonal.as_ref().ok_or(Error::Untracked)?;
    if !q.num().contains_var(ode.z) {
        return Ok(Vec::new());
    }
    let split = split_roots(q.num(), ode.z)?;
    if let Some((factor, _)) = split.leftover.first() {
        return Err(Error::IrrationalZero(factor.to_string()));
    }
    let mut out = Vec::new();
    for (location, order) in split.roots {
        if singular.contains(&location) {
            return Err(Error::ApparentCollision(location.to_string()));
        }
        out.push(ApparentPoint { location, order });
    }
    Ok(out)
}
