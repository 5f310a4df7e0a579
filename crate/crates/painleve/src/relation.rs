use painleve_core::{rf, Matrix, RatFunc};
use painleve_schlesinger::SchlesingerSystem;

use crate::error::Result;

/// True when `relation(lambda, t)`, a function of the symbols `lambda` and
/// `t`, vanishes identically after substituting the given curves.
pub fn check_relation(lambda: &RatFunc, t: &RatFunc, relation: &RatFunc) -> Result<bool> {
    Ok(relation.subs(&[("lambda", lambda), ("t", t)])?.is_zero())
}

/// `lambda^4 - 2(t+1)lambda^3 + 6t lambda^2 - 2t(t+1)lambda + t^3 - t^2 + t`.
pub fn quartic_relation() -> RatFunc {
    rf("lambda^4-2*t*lambda^3-2*lambda^3+6*t*lambda^2-2*t^2*lambda-2*t*lambda+t^3-t^2+t")
}

/// The combined matrix `A(z)` of the system with `b` specialized.
pub fn reducibility_limit(system: &SchlesingerSystem, b: &RatFunc) -> Result<Matrix> {
    Ok(system.matrix().subs(&[("b", b)])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_is_not_a_relation_of_the_parabola() {
        assert!(!check_relation(&rf("-b"), &rf("b^2"), &rf("lambda-t")).unwrap());
        assert!(check_relation(&rf("-b"), &rf("b^2"), &rf("lambda^2-t")).unwrap());
    }
}
