use painleve_core::roots::{sqrt, split_roots};
use painleve_core::{partial_fractions, rf, RatFunc};

use crate::error::{Error, Result};
use crate::ode::ScalarOde;
use crate::util::limit_at_infinity;

#[derive(Clone, Debug, PartialEq)]
pub struct SchemePoint {
    /// `None` stands for the point at infinity.
    pub location: Option<RatFunc>,
    pub exponents: [RatFunc; 2],
}

/// Singular points with their local exponents; infinity comes last.
#[derive(Clone, Debug, PartialEq)]
pub struct RiemannScheme {
    pub points: Vec<SchemePoint>,
}

impl RiemannScheme {
    pub fn finite_points(&self) -> usize {
        self.points.iter().filter(|p| p.location.is_some()).count()
    }

    pub fn exponent_sum(&self) -> RatFunc {
        self.points
            .iter()
            .flat_map(|p| p.exponents.iter())
            .fold(rf("0"), |acc, e| &acc + e)
    }

    /// Sum of all exponents equals the number of finite points minus one.
    pub fn satisfies_fuchs_relation(&self) -> bool {
        self.exponent_sum() == RatFunc::from_int(&painleve_core::Space::standard(), self.finite_points() as i64 - 1)
    }

    pub fn exponents_at(&self, location: &RatFunc) -> Option<&[RatFunc; 2]> {
        self.points.iter().find(|p| p.location.as_ref() == Some(location)).map(|p| &p.exponents)
    }

    pub fn exponents_at_infinity(&self) -> Option<&[RatFunc; 2]> {
        self.points.iter().find(|p| p.location.is_none()).map(|p| &p.exponents)
    }
}

/// Roots of `s^2 + B s + C`, smaller-sign root first.
fn solve_quadratic(b: &RatFunc, c: &RatFunc, at: &str) -> Result<[RatFunc; 2]> {
    let disc = &(b * b) - &(&rf("4") * c);
    let d = sqrt(&disc).ok_or_else(|| Error::IrrationalExponent(at.to_string()))?;
    let half = rf("1/2");
    Ok([&(&b.neg() - &d) * &half, &(&b.neg() + &d) * &half])
}

/// Poles of `f` in `z` that are rational in the other variables.
fn poles(f: &RatFunc, z: usize) -> Result<Vec<RatFunc>> {
    if f.is_zero() || !f.den().contains_var(z) {
        return Ok(Vec::new());
    }
    let split = split_roots(f.den(), z)?;
    if let Some((factor, _)) = split.leftover.first() {
        return Err(Error::NotFuchsian { point: format!("zeros of {factor}"), detail: "irrational pole".into() });
    }
    Ok(split.roots.into_iter().map(|(r, _)| r).collect())
}

/// Riemann scheme over the declared points and every further pole of
/// `p1`, `p2`. At a finite point the exponents solve
/// `s(s-1) + a s + b = 0` with `a` the residue of `p1` and `b` the
/// double-pole coefficient of `p2`; at infinity they solve
/// `s(s+1) - (sum a) s + (sum b + sum c t) = 0` with `c` the residues of `p2`.
pub fn riemann_scheme(ode: &ScalarOde) -> Result<RiemannScheme> {
    let z = ode.z;
    let mut points: Vec<RatFunc> = ode.singularities.clone();
    for f in [&ode.p1, &ode.p2] {
        for p in poles(f, z)? {
            if !points.contains(&p) {
                points.push(p);
            }
        }
    }
    let pf1 = partial_fractions(&ode.p1, z, &points)?;
    let pf2 = partial_fractions(&ode.p2, z, &points)?;
    if !pf1.polynomial.is_zero() || !pf2.polynomial.is_zero() {
        return Err(Error::NotFuchsian { point: "infinity".into(), detail: "polynomial part".into() });
    }
    if limit_at_infinity(&ode.p2, z, 2).is_none() {
        return Err(Error::NotFuchsian { point: "infinity".into(), detail: "p2 decays slower than 1/z^2".into() });
    }
    let zero = rf("0");
    let (mut sum_a, mut sum_b, mut sum_ct) = (zero.clone(), zero.clone(), zero.clone());
    let mut out = Vec::with_capacity(points.len() + 1);
    for (k, t) in points.iter().enumerate() {
        let (t1, t2) = (&pf1.poles[k], &pf2.poles[k]);
        if t1.order() > 1 || t2.order() > 2 {
            return Err(Error::NotFuchsian { point: t.to_string(), detail: "pole order too high".into() });
        }
        let a = t1.residue();
        let c = t2.residue();
        let b = t2.coeffs.get(1).cloned().unwrap_or_else(|| zero.clone());
        let exps = solve_quadratic(&(&a - &rf("1")), &b, &t.to_string())?;
        sum_a = &sum_a + &a;
        sum_b = &sum_b + &b;
        sum_ct = &sum_ct + &(&c * t);
        out.push(SchemePoint { location: Some(t.clone()), exponents: exps });
    }
    let exps = solve_quadratic(&(&rf("1") - &sum_a), &(&sum_b + &sum_ct), "infinity")?;
    out.push(SchemePoint { location: None, exponents: exps });
    Ok(RiemannScheme { points: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use painleve_core::var_index;

    #[test]
    fn trivial_equation_has_exponents_zero_one() {
        let ode = ScalarOde {
            z: var_index("z"),
            p1: rf("0"),
            p2: rf("0"),
            singularities: vec![rf("0"), rf("1")],
            off_diagonal: None,
        };
        let s = riemann_scheme(&ode).unwrap();
        assert_eq!(s.exponents_at(&rf("0")).unwrap(), &[rf("0"), rf("1")]);
        assert_eq!(s.exponents_at(&rf("1")).unwrap(), &[rf("0"), rf("1")]);
        assert!(s.satisfies_fuchs_relation());
    }

    #[test]
    fn hypergeometric_exponents() {
        // z(1-z)y'' + (g - (a+c+1)z)y' - a c y = 0 with g = 1/2.
        let ode = ScalarOde {
            z: var_index("z"),
            p1: rf("(1/2-(a+c+1)*z)/(z*(1-z))"),
            p2: rf("-a*c/(z*(1-z))"),
            singularities: vec![rf("0"), rf("1")],
            off_diagonal: None,
        };
        let s = riemann_scheme(&ode).unwrap();
        assert_eq!(s.exponents_at(&rf("0")).unwrap(), &[rf("0"), rf("1/2")]);
        let inf = s.exponents_at_infinity().unwrap();
        assert!(inf.contains(&rf("a")) && inf.contains(&rf("c")));
        assert!(s.satisfies_fuchs_relation());
    }

    #[test]
    fn irregular_point_is_rejected() {
        let ode = ScalarOde {
            z: var_index("z"),
            p1: rf("1/z^2"),
            p2: rf("0"),
            singularities: vec![rf("0")],
            off_diagonal: None,
        };
        assert!(matches!(riemann_scheme(&ode), Err(Error::NotFuchsian { .. })));
    }
}
