//! Canonical multivariate rational functions over Q.
//!
//! A value is stored as `scalar * num / den` where `num` and `den` are coprime,
//! integer-primitive polynomials with positive leading coefficient and
//! `scalar` is a reduced rational. Zero is `0 * 1 / 1`. Equal functions have
//! identical representations, so structural equality is mathematical equality.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gcd::{gcd, is_unit};
use crate::poly::Poly;
use crate::space::{self, Space, SpaceRef};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    scalar: BigRational,
    num: Poly,
    den: Poly,
}

impl std::fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

fn split_content(p: &Poly) -> (BigInt, Poly) {
    let c = p.content();
    if c.is_one() {
        (c, p.clone())
    } else {
        (c.clone(), p.div_scalar_exact(&c))
    }
}

impl RatFunc {
    /// `num / den`, canonicalized. Errors if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = {
            let (a, b) = crate::poly::align(&num, &den);
            (a.into_owned(), b.into_owned())
        };
        if num.is_zero() {
            return Ok(RatFunc::zero(num.space()));
        }
        let g = if is_unit(&den) || is_unit(&num) { Poly::one(num.space()) } else { gcd(&num, &den) };
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (crate::gcd::div(&num, &g), crate::gcd::div(&den, &g))
        };
        let (cn, n) = split_content(&n);
        let (cd, d) = split_content(&d);
        Ok(RatFunc { scalar: BigRational::new(cn, cd), num: n, den: d })
    }

    /// Assemble from parts already known to be canonical apart from the scalar.
    fn from_parts(scalar: BigRational, num: Poly, den: Poly) -> RatFunc {
        if scalar.is_zero() {
            return RatFunc::zero(num.space());
        }
        RatFunc { scalar, num, den }
    }

    pub fn zero(space: &SpaceRef) -> RatFunc {
        RatFunc { scalar: BigRational::zero(), num: Poly::one(space), den: Poly::one(space) }
    }

    pub fn one(space: &SpaceRef) -> RatFunc {
        RatFunc::from_rational(space, BigRational::one())
    }

    pub fn from_int(space: &SpaceRef, n: i64) -> RatFunc {
        RatFunc::from_rational(space, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(space: &SpaceRef, n: i64, d: i64) -> RatFunc {
        RatFunc::from_rational(space, BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(space: &SpaceRef, q: BigRational) -> RatFunc {
        RatFunc::from_parts(q, Poly::one(space), Poly::one(space))
    }

    pub fn from_poly(p: &Poly) -> RatFunc {
        if p.is_zero() {
            return RatFunc::zero(p.space());
        }
        let (c, n) = split_content(p);
        RatFunc { scalar: BigRational::from_integer(c), num: n, den: Poly::one(p.space()) }
    }

    /// The variable `name` of `space`.
    pub fn var(space: &SpaceRef, name: &str) -> Result<RatFunc> {
        let i = space.require(name)?;
        Ok(RatFunc::from_poly(&Poly::var(space, i)))
    }

    /// Parse in the standard variable space.
    pub fn parse(text: &str) -> Result<RatFunc> {
        crate::parse::parse(text, &Space::standard())
    }

    pub fn space(&self) -> &SpaceRef {
        self.num.space()
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    /// Primitive numerator polynomial (without the scalar).
    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// Primitive denominator polynomial with positive leading coefficient.
    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Numerator and denominator as integer polynomials: `self = numer / denom`.
    pub fn numer_denom(&self) -> (Poly, Poly) {
        let n = self.num.scale(self.scalar.numer());
        let d = self.den.scale(self.scalar.denom());
        (n, d)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.scalar.clone())
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn var_mask(&self) -> u32 {
        self.num.var_mask() | self.den.var_mask()
    }

    pub fn to_space(&self, target: &SpaceRef) -> Result<RatFunc> {
        Ok(RatFunc {
            scalar: self.scalar.clone(),
            num: self.num.to_space(target)?,
            den: self.den.to_space(target)?,
        })
    }

    fn aligned(&self, other: &RatFunc) -> (RatFunc, RatFunc) {
        let target = space::common(self.space(), other.space()).expect("incompatible variable spaces");
        (self.to_space(&target).expect("embeds"), other.to_space(&target).expect("embeds"))
    }

    fn same_space(&self, other: &RatFunc) -> bool {
        space::same(self.space(), other.space())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { scalar: -self.scalar.clone(), num: self.num.clone(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if !self.same_space(other) {
            let (a, b) = self.aligned(other);
            return a.add(&b);
        }
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (p1, q1) = (self.scalar.numer(), self.scalar.denom());
        let (p2, q2) = (other.scalar.numer(), other.scalar.denom());
        let qq = BigRational::from_integer(q1 * q2);
        if self.den == other.den {
            let t = self.num.scale(&(p1 * q2)).add(&other.num.scale(&(p2 * q1)));
            if t.is_zero() {
                return RatFunc::zero(self.space());
            }
            let (k, tp) = split_content(&t);
            let g = if self.den.is_one() { Poly::one(self.space()) } else { gcd(&tp, &self.den) };
            let (n, d) = if g.is_one() {
                (tp, self.den.clone())
            } else {
                (crate::gcd::div(&tp, &g), crate::gcd::div(&self.den, &g))
            };
            return RatFunc::from_parts(BigRational::from_integer(k) / qq, n, d);
        }
        let g = if self.den.is_one() || other.den.is_one() {
            Poly::one(self.space())
        } else {
            gcd(&self.den, &other.den)
        };
        let (d1, d2) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (crate::gcd::div(&self.den, &g), crate::gcd::div(&other.den, &g))
        };
        let t = self
            .num
            .mul(&d2)
            .scale(&(p1 * q2))
            .add(&other.num.mul(&d1).scale(&(p2 * q1)));
        if t.is_zero() {
            return RatFunc::zero(self.space());
        }
        let (k, tp) = split_content(&t);
        let (n, d) = if g.is_one() {
            (tp, d1.mul(&other.den))
        } else {
            let h = gcd(&tp, &g);
            if h.is_one() {
                (tp, d1.mul(&other.den))
            } else {
                (crate::gcd::div(&tp, &h), d1.mul(&crate::gcd::div(&other.den, &h)))
            }
        };
        RatFunc::from_parts(BigRational::from_integer(k) / qq, n, d)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if !self.same_space(other) {
            let (a, b) = self.aligned(other);
            return a.mul(&b);
        }
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.space());
        }
        let scalar = &self.scalar * &other.scalar;
        let g1 = if self.num.is_one() || other.den.is_one() {
            Poly::one(self.space())
        } else {
            gcd(&self.num, &other.den)
        };
        let g2 = if other.num.is_one() || self.den.is_one() {
            Poly::one(self.space())
        } else {
            gcd(&other.num, &self.den)
        };
        let n1 = if g1.is_one() { self.num.clone() } else { crate::gcd::div(&self.num, &g1) };
        let d2 = if g1.is_one() { other.den.clone() } else { crate::gcd::div(&other.den, &g1) };
        let n2 = if g2.is_one() { other.num.clone() } else { crate::gcd::div(&other.num, &g2) };
        let d1 = if g2.is_one() { self.den.clone() } else { crate::gcd::div(&self.den, &g2) };
        RatFunc::from_parts(scalar, n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, q: &BigRational) -> RatFunc {
        RatFunc::from_parts(&self.scalar * q, self.num.clone(), self.den.clone())
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { scalar: self.scalar.recip(), num: self.den.clone(), den: self.num.clone() })
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        if self.is_zero() {
            return Ok(if e == 0 { RatFunc::one(self.space()) } else { self.clone() });
        }
        Ok(RatFunc {
            scalar: num_traits::pow(self.scalar.clone(), e as usize),
            num: self.num.pow(e),
            den: self.den.pow(e),
        })
    }

    /// Partial derivative with respect to the variable of index `v`.
    pub fn derivative(&self, v: usize) -> RatFunc {
        if self.is_zero() || !self.contains_var(v) {
            return RatFunc::zero(self.space());
        }
        if self.den.is_constant() {
            return RatFunc::from_poly(&self.num.derivative(v)).scale(&self.scalar);
        }
        // (n/d)' = (n' d - n d') / d^2; only factors of d can cancel.
        let t = self.num.derivative(v).mul(&self.den).sub(&self.num.mul(&self.den.derivative(v)));
        let r = RatFunc::new(t, self.den.mul(&self.den)).expect("nonzero denominator");
        r.scale(&self.scalar)
    }

    /// Partial derivative with respect to the named variable.
    pub fn diff(&self, name: &str) -> Result<RatFunc> {
        Ok(self.derivative(self.space().require(name)?))
    }

    /// Simultaneous substitution of variables (by index) with rational functions.
    pub fn substitute(&self, bindings: &[(usize, RatFunc)]) -> Result<RatFunc> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut target = self.space().clone();
        for (_, r) in bindings {
            target = space::common(&target, r.space())?;
        }
        let me = self.to_space(&target)?;
        let names: Vec<String> = bindings.iter().map(|(i, _)| self.space().name(*i).to_string()).collect();
        let bindings: Vec<(usize, RatFunc)> = bindings
            .iter()
            .zip(&names)
            .map(|((_, r), n)| Ok((target.require(n)?, r.to_space(&target)?)))
            .collect::<Result<_>>()?;
        let bindings: Vec<&(usize, RatFunc)> =
            bindings.iter().filter(|(v, _)| me.contains_var(*v)).collect();
        if bindings.is_empty() {
            return Ok(me);
        }
        let den = subst_poly(&me.den, &bindings)?;
        if den.is_zero() {
            return Err(Error::PoleHit);
        }
        let num = subst_poly(&me.num, &bindings)?;
        Ok(num.mul(&den.inv()?).scale(&me.scalar))
    }

    /// Substitute by variable names.
    pub fn subs(&self, bindings: &[(&str, &RatFunc)]) -> Result<RatFunc> {
        let idx: Vec<(usize, RatFunc)> = bindings
            .iter()
            .map(|(n, r)| Ok((self.space().require(n)?, (*r).clone())))
            .collect::<Result<_>>()?;
        self.substitute(&idx)
    }

    /// Evaluate at a full point (one value per variable).
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::PoleHit);
        }
        Ok(&self.scalar * self.num.eval(point) / d)
    }

    /// Degree of numerator minus degree of denominator in `v`.
    pub fn degree_in(&self, v: usize) -> i64 {
        self.num.degree(v) as i64 - self.den.degree(v) as i64
    }

    /// True if the leading coefficient of the numerator (times the scalar) is positive.
    pub fn leading_sign_positive(&self) -> bool {
        self.scalar.is_positive()
    }
}

/// Substitute into a polynomial, recursing over the bound variables so that
/// substituted expressions are never substituted into again.
fn subst_poly(p: &Poly, bindings: &[&(usize, RatFunc)]) -> Result<RatFunc> {
    let Some(((v, s), rest)) = bindings.split_first().map(|(b, r)| ((b.0, &b.1), r)) else {
        return Ok(RatFunc::from_poly(p));
    };
    if !p.contains_var(v) {
        return subst_poly(p, rest);
    }
    let coeffs = p.coeffs_in(v);
    let n = coeffs.len() - 1;
    // sum c_k (P/Q)^k = (sum c_k P^k Q^(n-k)) / Q^n
    let sn = RatFunc::from_poly(&s.num).scale(&BigRational::from_integer(s.scalar.numer().clone()));
    let sd = RatFunc::from_poly(&s.den).scale(&BigRational::from_integer(s.scalar.denom().clone()));
    let mut acc = RatFunc::zero(p.space());
    let mut pows_n = vec![RatFunc::one(p.space())];
    for _ in 0..n {
        let last = pows_n.last().expect("nonempty").mul(&sn);
        pows_n.push(last);
    }
    let mut pow_d = RatFunc::one(p.space());
    for k in (0..=n).rev() {
        if !coeffs[k].is_zero() {
            let ck = subst_poly(&coeffs[k], rest)?;
            acc = acc.add(&ck.mul(&pows_n[k]).mul(&pow_d));
        }
        pow_d = pow_d.mul(&sd);
    }
    let dn = sd.pow(n as i32)?;
    if dn.is_zero() {
        return Err(Error::PoleHit);
    }
    Ok(acc.mul(&dn.inv()?))
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

/// # Panics
/// On division by the zero function; use [`RatFunc::checked_div`] to handle it.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

// Owned-receiver impls would shadow the inherent `&self` methods of the same
// name, so only a reference on the left is supported.
macro_rules! owned_rhs_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
owned_rhs_ops!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    #[test]
    fn cancellation_is_canonical() {
        assert_eq!(r("(b^2-1)/(b-1)"), r("b+1"));
        assert_eq!(r("(2*a-2)/(4*a*b-4*b)"), r("1/(2*b)"));
    }

    #[test]
    fn addition_over_common_factor() {
        let s = &r("1/(z*(z-1))") + &r("1/z");
        assert_eq!(s, r("1/(z-1)"));
        assert!((&r("a/b") - &r("a/b")).is_zero());
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let f = r("1/(1-b)");
        assert_eq!(f, r("-1/(b-1)"));
        assert!(f.den().lc() > BigInt::zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        let b = Space::standard().index("b").unwrap();
        assert_eq!(r("b^2").derivative(b), r("2*b"));
        let z = Space::standard().index("z").unwrap();
        assert_eq!(r("1/(z-t)").derivative(z), r("-1/(z-t)^2"));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let f = r("a + 2*b");
        let g = f.subs(&[("a", &r("b")), ("b", &r("a"))]).unwrap();
        assert_eq!(g, r("b + 2*a"));
    }

    #[test]
    fn substitution_into_pole_errors() {
        let f = r("1/(b-1)");
        assert_eq!(f.subs(&[("b", &r("1"))]), Err(Error::PoleHit));
    }

    #[test]
    fn rationalizing_substitution_gives_square() {
        let f = r("b^2-b-2");
        let g = f.subs(&[("b", &r("3/4*(b+1/b)+1/2"))]).unwrap();
        // (9/16)(b-1)^2(b+1)^2/b^2
        assert!(crate::roots::sqrt(&g).is_some());
    }
}
