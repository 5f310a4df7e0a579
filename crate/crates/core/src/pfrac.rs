//! Partial fraction decomposition with respect to one variable over a
//! supplied list of pole locations.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub location: RatFunc,
    /// `coeffs[k]` multiplies `1/(v - location)^(k+1)`.
    pub coeffs: Vec<RatFunc>,
}

impl PoleTerm {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn residue(&self) -> RatFunc {
        self.coeffs.first().cloned().unwrap_or_else(|| RatFunc::zero(self.location.space()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub var: usize,
    pub polynomial: UPoly,
    /// One entry per supplied pole, in the supplied order (order 0 if absent).
    pub poles: Vec<PoleTerm>,
}

impl PartialFractions {
    /// Sum the decomposition back into a single rational function.
    pub fn resum(&self) -> RatFunc {
        let sp = self.polynomial.space().clone();
        let v = RatFunc::from_poly(&Poly::var(&sp, self.var));
        let mut acc = self.polynomial.to_ratfunc(self.var);
        for p in &self.poles {
            let lin = v.sub(&p.location);
            let mut pow = RatFunc::one(&sp);
            for c in &p.coeffs {
                pow = pow.mul(&lin);
                acc = acc.add(&c.checked_div(&pow).expect("pole factor is nonzero"));
            }
        }
        acc
    }
}

/// Decompose `f` in the variable `v` over the given pole locations (free of `v`).
pub fn partial_fractions(f: &RatFunc, v: usize, poles: &[RatFunc]) -> Result<PartialFractions> {
    let sp = f.space().clone();
    let (n, d) = f.numer_denom();
    let num = UPoly::from_poly(&n, v);
    let mut rest = UPoly::from_poly(&d, v);
    let mut orders = Vec::with_capacity(poles.len());
    for p in poles {
        if p.contains_var(v) {
            return Err(Error::Shape("pole location depends on the expansion variable".into()));
        }
        let mut m = 0usize;
        loop {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let (q, r) = rest.div_linear(p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        orders.push(m);
    }
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::UnaccountedPole(sp.name(v).to_string()));
    }
    let unit = rest.coeff(0);
    let linear = |p: &RatFunc| UPoly::linear(p);

    let mut full_den = UPoly::constant(unit.clone());
    for (p, &m) in poles.iter().zip(&orders) {
        for _ in 0..m {
            full_den = full_den.mul(&linear(p));
        }
    }
    let (polynomial, _) = num.div_rem(&full_den)?;

    let mut terms = Vec::with_capacity(poles.len());
    for (i, (p, &m)) in poles.iter().zip(&orders).enumerate() {
        if m == 0 {
            terms.push(PoleTerm { location: p.clone(), coeffs: Vec::new() });
            continue;
        }
        // g = f (v-p)^m = num / (unit * prod_{q != p} (v-q)^{m_q}); expand g(p+s).
        let mut other = UPoly::constant(unit.clone());
        for (j, (q, &mq)) in poles.iter().zip(&orders).enumerate() {
            if j != i {
                for _ in 0..mq {
                    other = other.mul(&linear(q));
                }
            }
        }
        let ns = num.taylor_shift(p);
        let ds = other.taylor_shift(p);
        let series = series_div(&ns, &ds, m)?;
        // coefficient of s^j belongs to 1/(v-p)^(m-j)
        let coeffs = (0..m).map(|k| series[m - 1 - k].clone()).collect();
        terms.push(PoleTerm { location: p.clone(), coeffs });
    }
    Ok(PartialFractions { var: v, polynomial, poles: terms })
}

/// First `n` coefficients of the power series `a / b`.
fn series_div(a: &UPoly, b: &UPoly, n: usize) -> Result<Vec<RatFunc>> {
    let b0_inv = b.coeff(0).inv()?;
    let mut out: Vec<RatFunc> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = a.coeff(k);
        for (j, oj) in out.iter().enumerate() {
            let bk = b.coeff(k - j);
            if !bk.is_zero() {
                acc = acc.sub(&oj.mul(&bk));
            }
        }
        out.push(acc.mul(&b0_inv));
    }
    Ok(out)
}

/// Residue of `f` at the simple or multiple pole `v = p`.
pub fn residue(f: &RatFunc, v: usize, p: &RatFunc) -> Result<RatFunc> {
    let pf = partial_fractions_at(f, v, p)?;
    Ok(pf.residue())
}

/// Principal part at a single pole; the remaining denominator may be arbitrary.
pub fn partial_fractions_at(f: &RatFunc, v: usize, p: &RatFunc) -> Result<PoleTerm> {
    let (n, d) = f.numer_denom();
    let num = UPoly::from_poly(&n, v);
    let mut rest = UPoly::from_poly(&d, v);
    let mut m = 0usize;
    while rest.degree().unwrap_or(0) > 0 {
        let (q, r) = rest.div_linear(p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        m += 1;
    }
    if m == 0 {
        return Ok(PoleTerm { location: p.clone(), coeffs: Vec::new() });
    }
    let series = series_div(&num.taylor_shift(p), &rest.taylor_shift(p), m)?;
    let coeffs = (0..m).map(|k| series[m - 1 - k].clone()).collect();
    Ok(PoleTerm { location: p.clone(), coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Space;

    fn r(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    fn z() -> usize {
        Space::standard().index("z").unwrap()
    }

    #[test]
    fn two_simple_poles() {
        let pf = partial_fractions(&r("1/(z*(z-1))"), z(), &[r("0"), r("1")]).unwrap();
        assert_eq!(pf.poles[0].coeffs, vec![r("-1")]);
        assert_eq!(pf.poles[1].coeffs, vec![r("1")]);
        assert!(pf.polynomial.is_zero());
    }

    #[test]
    fn three_poles_with_parameter() {
        let f = r("1/(z*(z-1)*(z-b^2))");
        let pf = partial_fractions(&f, z(), &[r("0"), r("1"), r("b^2")]).unwrap();
        // Cover-up: 1/((0-1)(0-b^2)), 1/(1*(1-b^2)), 1/(b^2(b^2-1)).
        assert_eq!(pf.poles[0].residue(), r("1/b^2"));
        assert_eq!(pf.poles[1].residue(), r("1/(1-b^2)"));
        assert_eq!(pf.poles[2].residue(), r("1/(b^4-b^2)"));
        assert_eq!(pf.resum(), f);
    }

    #[test]
    fn polynomial_part() {
        let pf = partial_fractions(&r("z/(z-1)"), z(), &[r("1")]).unwrap();
        assert_eq!(pf.polynomial.coeffs(), &[r("1")]);
        assert_eq!(pf.poles[0].coeffs, vec![r("1")]);
    }

    #[test]
    fn higher_order_pole() {
        let f = r("(z^2+a)/((z-b)^3*(z+1))");
        let pf = partial_fractions(&f, z(), &[r("b"), r("-1")]).unwrap();
        assert_eq!(pf.poles[0].order(), 3);
        assert_eq!(pf.resum(), f);
    }

    #[test]
    fn missing_pole_is_an_error() {
        let e = partial_fractions(&r("1/(z*(z-2))"), z(), &[r("0")]);
        assert_eq!(e, Err(Error::UnaccountedPole("z".into())));
    }
}
