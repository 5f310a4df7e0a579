//! Dense univariate polynomials whose coefficients are rational functions in
//! the remaining variables.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::space::SpaceRef;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    space: SpaceRef,
    /// Ascending coefficients, no trailing zeros.
    coeffs: Vec<RatFunc>,
}

impl UPoly {
    pub fn new(space: &SpaceRef, coeffs: Vec<RatFunc>) -> UPoly {
        let mut p = UPoly { space: space.clone(), coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero(space: &SpaceRef) -> UPoly {
        UPoly { space: space.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: RatFunc) -> UPoly {
        let space = c.space().clone();
        UPoly::new(&space, vec![c])
    }

    /// `x - r`.
    pub fn linear(r: &RatFunc) -> UPoly {
        UPoly::new(r.space(), vec![r.neg(), RatFunc::one(r.space())])
    }

    /// The coefficients of a polynomial in variable `v`.
    pub fn from_poly(p: &Poly, v: usize) -> UPoly {
        let coeffs = p.coeffs_in(v).iter().map(RatFunc::from_poly).collect();
        UPoly::new(p.space(), coeffs)
    }

    /// `prod (x - r_i)`.
    pub fn from_roots(space: &SpaceRef, roots: &[RatFunc]) -> UPoly {
        roots
            .iter()
            .fold(UPoly::constant(RatFunc::one(space)), |acc, r| acc.mul(&UPoly::linear(r)))
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(|| RatFunc::zero(&self.space))
    }

    pub fn lc(&self) -> RatFunc {
        self.coeffs.last().cloned().unwrap_or_else(|| RatFunc::zero(&self.space))
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        UPoly::new(&self.space, coeffs)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.scale(&RatFunc::from_int(&self.space, -1)))
    }

    pub fn scale(&self, c: &RatFunc) -> UPoly {
        UPoly::new(&self.space, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(&self.space);
        }
        let mut out = vec![RatFunc::zero(&self.space); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(&self.space, out)
    }

    pub fn eval(&self, x: &RatFunc) -> RatFunc {
        self.coeffs
            .iter()
            .rev()
            .fold(RatFunc::zero(&self.space), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> UPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&RatFunc::from_int(&self.space, k as i64)))
            .collect();
        UPoly::new(&self.space, coeffs)
    }

    /// Quotient and remainder by `x - r` (synthetic division).
    pub fn div_linear(&self, r: &RatFunc) -> (UPoly, RatFunc) {
        if self.is_zero() {
            return (self.clone(), RatFunc::zero(&self.space));
        }
        let n = self.coeffs.len();
        let mut q = vec![RatFunc::zero(&self.space); n - 1];
        let mut acc = RatFunc::zero(&self.space);
        for k in (0..n).rev() {
            acc = acc.mul(r).add(&self.coeffs[k]);
            if k > 0 {
                q[k - 1] = acc.clone();
            }
        }
        (UPoly::new(&self.space, q), acc)
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.lc().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![RatFunc::zero(&self.space); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            let f = r[k].mul(&lc_inv);
            if !f.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    r[idx] = r[idx].sub(&f.mul(c));
                }
            }
            q[k - dd] = f;
            r.pop();
        }
        Ok((UPoly::new(&self.space, q), UPoly::new(&self.space, r)))
    }

    /// Coefficients of `self(r + s)` as a polynomial in `s`.
    pub fn taylor_shift(&self, r: &RatFunc) -> UPoly {
        let mut cur = self.clone();
        let mut out = Vec::with_capacity(self.coeffs.len());
        while !cur.is_zero() {
            let (q, rem) = cur.div_linear(r);
            out.push(rem);
            cur = q;
        }
        UPoly::new(&self.space, out)
    }

    /// As a rational function in the variable `v`.
    pub fn to_ratfunc(&self, v: usize) -> RatFunc {
        let x = RatFunc::from_poly(&Poly::var(&self.space, v));
        self.eval(&x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    #[test]
    fn taylor_shift_matches_expansion() {
        let sp = crate::Space::standard();
        // x^2 around b: (b+s)^2 = b^2 + 2b s + s^2
        let p = UPoly::new(&sp, vec![r("0"), r("0"), r("1")]);
        let t = p.taylor_shift(&r("b"));
        assert_eq!(t.coeffs(), &[r("b^2"), r("2*b"), r("1")]);
    }

    #[test]
    fn division_identity() {
        let sp = crate::Space::standard();
        let p = UPoly::new(&sp, vec![r("a"), r("1/b"), r("3"), r("c")]);
        let d = UPoly::new(&sp, vec![r("b"), r("a")]);
        let (q, rem) = p.div_rem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&rem), p);
        assert!(rem.degree().unwrap_or(0) < 1);
    }
}
