//! Sparse multivariate polynomials with integer coefficients.
//!
//! Terms are kept sorted in strictly decreasing lexicographic order of their
//! exponent vectors (the variable order of the owning [`Space`]), with no zero
//! coefficients stored. Rational coefficients are handled one level up by
//! [`RatFunc`](crate::RatFunc), which carries a rational scalar.

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::modp;
use crate::space::{self, SpaceRef, MAX_VARS};

pub type Mono = [u16; MAX_VARS];

pub(crate) const ONE_MONO: Mono = [0; MAX_VARS];

#[inline]
pub(crate) fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for i in 0..MAX_VARS {
        m[i] += b[i];
    }
    m
}

#[inline]
pub(crate) fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    let mut m = *a;
    for i in 0..MAX_VARS {
        m[i] = m[i].checked_sub(b[i])?;
    }
    Some(m)
}

#[inline]
fn mono_min(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for i in 0..MAX_VARS {
        m[i] = m[i].min(b[i]);
    }
    m
}

#[inline]
fn mono_degree(m: &Mono) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

#[derive(Clone)]
pub struct Poly {
    space: SpaceRef,
    terms: Vec<(Mono, BigInt)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && space::same(&self.space, &other.space)
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

/// Bring two polynomials into one space (the larger one).
///
/// # Panics
/// If neither space contains the other.
pub(crate) fn align<'a>(a: &'a Poly, b: &'a Poly) -> (Cow<'a, Poly>, Cow<'a, Poly>) {
    if space::same(&a.space, &b.space) {
        return (Cow::Borrowed(a), Cow::Borrowed(b));
    }
    let target = space::common(&a.space, &b.space).expect("incompatible variable spaces");
    let a2 = if space::same(&a.space, &target) {
        Cow::Borrowed(a)
    } else {
        Cow::Owned(a.to_space(&target).expect("embedding checked"))
    };
    let b2 = if space::same(&b.space, &target) {
        Cow::Borrowed(b)
    } else {
        Cow::Owned(b.to_space(&target).expect("embedding checked"))
    };
    (a2, b2)
}

impl Poly {
    pub fn zero(space: &SpaceRef) -> Poly {
        Poly { space: space.clone(), terms: Vec::new() }
    }

    pub fn one(space: &SpaceRef) -> Poly {
        Poly::constant(space, BigInt::one())
    }

    pub fn constant(space: &SpaceRef, c: BigInt) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(ONE_MONO, c)] };
        Poly { space: space.clone(), terms }
    }

    /// The variable with index `i` in `space`.
    pub fn var(space: &SpaceRef, i: usize) -> Poly {
        assert!(i < space.len(), "variable index out of range");
        let mut m = ONE_MONO;
        m[i] = 1;
        Poly { space: space.clone(), terms: vec![(m, BigInt::one())] }
    }

    pub fn monomial(space: &SpaceRef, m: Mono, c: BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(space);
        }
        Poly { space: space.clone(), terms: vec![(m, c)] }
    }

    /// Build from arbitrary terms: duplicates are combined, zeros dropped.
    pub fn from_terms(space: &SpaceRef, terms: Vec<(Mono, BigInt)>) -> Poly {
        let mut map: HashMap<Mono, BigInt> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            *map.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(space, map)
    }

    fn from_map(space: &SpaceRef, map: HashMap<Mono, BigInt>) -> Poly {
        let mut terms: Vec<(Mono, BigInt)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { space: space.clone(), terms }
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ONE_MONO && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ONE_MONO)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == ONE_MONO => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading coefficient in the monomial order (zero for the zero polynomial).
    pub fn lc(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn lm(&self) -> Option<&Mono> {
        self.terms.first().map(|t| &t.0)
    }

    /// Re-express in a space containing all variables of this one.
    pub fn to_space(&self, target: &SpaceRef) -> Result<Poly> {
        if space::same(&self.space, target) {
            return Ok(Poly { space: target.clone(), terms: self.terms.clone() });
        }
        let map = self
            .space
            .embedding(target)
            .ok_or(crate::error::Error::IncompatibleSpaces)?;
        let mut terms: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut n = ONE_MONO;
                for (i, &j) in map.iter().enumerate() {
                    n[j] = m[i];
                }
                (n, c.clone())
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Ok(Poly { space: target.clone(), terms })
    }

    pub fn neg(&self) -> Poly {
        Poly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    fn merge(&self, other: &Poly, subtract: bool) -> Poly {
        let (a, b) = align(self, other);
        let (a, b) = (a.as_ref(), b.as_ref());
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = &a.terms[i];
            let (mb, cb) = &b.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*mb, if subtract { -cb } else { cb.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = if subtract { ca - cb } else { ca + cb };
                    if !s.is_zero() {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        for (m, c) in &b.terms[j..] {
            out.push((*m, if subtract { -c } else { c.clone() }));
        }
        Poly { space: a.space.clone(), terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let (a, b) = align(self, other);
        let (a, b) = (a.as_ref(), b.as_ref());
        if a.is_zero() || b.is_zero() {
            return Poly::zero(&a.space);
        }
        if a.terms.len() == 1 {
            return b.mul_term(&a.terms[0].0, &a.terms[0].1);
        }
        if b.terms.len() == 1 {
            return a.mul_term(&b.terms[0].0, &b.terms[0].1);
        }
        let mut map: HashMap<Mono, BigInt> = HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = mono_mul(ma, mb);
                match map.get_mut(&m) {
                    Some(v) => *v += ca * cb,
                    None => {
                        map.insert(m, ca * cb);
                    }
                }
            }
        }
        Poly::from_map(&a.space, map)
    }

    /// Multiply by a single term; order is preserved.
    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.space);
        }
        Poly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(n, d)| (mono_mul(n, m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&ONE_MONO, c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(&self.space);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in Z[vars].
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (a, d) = align(self, d);
        let (a, d) = (a.as_ref(), d.as_ref());
        assert!(!d.is_zero(), "division by the zero polynomial");
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(a.terms.len());
            for (m, c) in &a.terms {
                let q = mono_div(m, dm)?;
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((q, qc));
            }
            return Some(Poly { space: a.space.clone(), terms: out });
        }
        let (dm, dc) = (&d.terms[0].0, &d.terms[0].1);
        let mut rem = a.clone();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = mono_div(m, dm)?;
            let (qc, r) = c.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            // Subtract qc*x^qm*d; the leading terms cancel exactly.
            let t = d.mul_term(&qm, &qc);
            rem = rem.sub(&t);
            quot.push((qm, qc));
        }
        Some(Poly { space: a.space.clone(), terms: quot })
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        Poly {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, d)| {
                    debug_assert!((d % c).is_zero());
                    (*m, d / c)
                })
                .collect(),
        }
    }

    /// Gcd of all coefficients, carrying the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            -g
        } else {
            g
        }
    }

    /// `self / content()`: integer-primitive with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        if c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m[v] as u32).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| mono_degree(m)).max().unwrap_or(0)
    }

    /// Bit mask of the variables that occur.
    pub fn var_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (m, _) in &self.terms {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[v] > 0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return ONE_MONO };
        it.fold(*first, |acc, (m, _)| mono_min(&acc, m))
    }

    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (mono_div(n, m).expect("monomial divides"), c.clone()))
                .collect(),
        }
    }

    /// Coefficients in `v`: entry `k` is the coefficient of `v^k` (free of `v`).
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree(v) as usize;
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m[v] as usize;
            let mut n = *m;
            n[v] = 0;
            buckets[k].push((n, c.clone()));
        }
        // Removing a variable keeps the relative order within a bucket.
        buckets
            .into_iter()
            .map(|t| Poly { space: self.space.clone(), terms: t })
            .collect()
    }

    pub fn from_coeffs_in(space: &SpaceRef, v: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let mut shift = ONE_MONO;
            shift[v] = k as u16;
            for (m, d) in &c.terms {
                terms.push((mono_mul(m, &shift), d.clone()));
            }
        }
        Poly::from_terms(space, terms)
    }

    /// Coefficient of `v^k`.
    pub fn coeff_in(&self, v: usize, k: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m[v] as u32 == k)
            .map(|(m, c)| {
                let mut n = *m;
                n[v] = 0;
                (n, c.clone())
            })
            .collect();
        Poly { space: self.space.clone(), terms }
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: usize) -> Poly {
        self.coeff_in(v, self.degree(v))
    }

    pub fn derivative(&self, v: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m[v] > 0)
            .map(|(m, c)| {
                let mut n = *m;
                n[v] -= 1;
                (n, c * BigInt::from(m[v]))
            })
            .collect();
        // Lowering one exponent keeps distinct monomials distinct and ordered.
        Poly { space: self.space.clone(), terms }
    }

    /// Evaluate at a full point (one value per variable of the space).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.space.len(), "point dimension");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &e) in m.iter().enumerate().take(point.len()) {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluate modulo [`modp::P`] at a full point.
    pub fn eval_mod(&self, point: &[u64]) -> u64 {
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = modp::from_bigint(c);
            for (i, &e) in m.iter().enumerate().take(point.len()) {
                if e > 0 {
                    t = modp::mul(t, modp::pow(point[i], e as u64));
                }
            }
            acc = modp::add(acc, t);
        }
        acc
    }

    /// Substitute integer values for some variables (others untouched).
    pub fn specialize_int(&self, values: &[(usize, BigInt)]) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut n = *m;
            let mut c = c.clone();
            for (v, val) in values {
                let e = n[*v];
                if e > 0 {
                    c *= num_traits::pow(val.clone(), e as usize);
                    n[*v] = 0;
                }
            }
            terms.push((n, c));
        }
        Poly::from_terms(&self.space, terms)
    }

    /// Dense univariate coefficients modulo p after evaluating every variable except `v`.
    pub(crate) fn univariate_mod(&self, v: usize, point: &[u64]) -> Vec<u64> {
        let deg = self.degree(v) as usize;
        let mut out = vec![0u64; deg + 1];
        for (m, c) in &self.terms {
            let mut t = modp::from_bigint(c);
            for (i, &e) in m.iter().enumerate().take(point.len()) {
                if i != v && e > 0 {
                    t = modp::mul(t, modp::pow(point[i], e as u64));
                }
            }
            let k = m[v] as usize;
            out[k] = modp::add(out[k], t);
        }
        out
    }

    /// Replace variable `v` by the polynomial `p` (homogeneous Horner in the coefficients).
    pub fn compose(&self, v: usize, p: &Poly) -> Poly {
        let coeffs = self.coeffs_in(v);
        let mut acc = Poly::zero(&self.space);
        for c in coeffs.iter().rev() {
            acc = acc.mul(p).add(c);
        }
        acc
    }

    /// Swap the roles of two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut n = *m;
                n.swap(i, j);
                (n, c.clone())
            })
            .collect();
        Poly::from_terms(&self.space, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp() -> SpaceRef {
        crate::space::Space::new(&["x", "y"]).unwrap()
    }

    fn p(terms: &[(u16, u16, i64)]) -> Poly {
        let s = sp();
        Poly::from_terms(
            &s,
            terms
                .iter()
                .map(|&(a, b, c)| {
                    let mut m = ONE_MONO;
                    m[0] = a;
                    m[1] = b;
                    (m, BigInt::from(c))
                })
                .collect(),
        )
    }

    #[test]
    fn product_and_exact_quotient() {
        let a = p(&[(1, 0, 1), (0, 1, -1)]); // x - y
        let b = p(&[(1, 0, 1), (0, 1, 1)]); // x + y
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[(2, 0, 1), (0, 2, -1)]));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&p(&[(1, 0, 1), (0, 0, 1)])), None);
    }

    #[test]
    fn coefficient_views_round_trip() {
        let f = p(&[(2, 1, 3), (1, 0, -2), (0, 3, 5), (0, 0, 7)]);
        let cs = f.coeffs_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in(f.space(), 0, &cs), f);
        let cs = f.coeffs_in(1);
        assert_eq!(Poly::from_coeffs_in(f.space(), 1, &cs), f);
    }

    #[test]
    fn content_takes_sign_of_leading_coefficient() {
        let f = p(&[(1, 0, -4), (0, 0, 6)]);
        assert_eq!(f.content(), BigInt::from(-2));
        assert_eq!(f.primitive(), p(&[(1, 0, 2), (0, 0, -3)]));
    }

    #[test]
    fn derivative_lowers_exponent() {
        let f = p(&[(3, 1, 2), (1, 0, 1)]);
        assert_eq!(f.derivative(0), p(&[(2, 1, 6), (0, 0, 1)]));
    }

    #[test]
    fn compose_substitutes_polynomial() {
        let f = p(&[(2, 0, 1)]); // x^2
        let g = p(&[(0, 1, 1), (0, 0, 1)]); // y + 1
        assert_eq!(f.compose(0, &g), p(&[(0, 2, 1), (0, 1, 2), (0, 0, 1)]));
    }
}
