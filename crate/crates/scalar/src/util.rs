use painleve_core::{RatFunc, UPoly};

/// `lim_{z -> oo} z^k f(z)`, or `None` if it is infinite.
pub fn limit_at_infinity(f: &RatFunc, z: usize, k: i64) -> Option<RatFunc> {
    if f.is_zero() {
        return Some(f.clone());
    }
    let excess = f.degree_in(z) + k;
    if excess > 0 {
        return None;
    }
    if excess < 0 {
        return Some(RatFunc::zero(f.space()));
    }
    let (n, d) = f.numer_denom();
    let ln = UPoly::from_poly(&n, z).lc();
    let ld = UPoly::from_poly(&d, z).lc();
    Some(ln.checked_div(&ld).expect("nonzero leading coefficient"))
}
