//! Multivariate polynomial gcd over Z, recursive in the main variable with a
//! subresultant remainder sequence for the univariate step.
//!
//! Results are normalized: integer-primitive with positive leading coefficient,
//! so `gcd` is the gcd over Q up to a unit.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::modp;
use crate::poly::{Mono, Poly, ONE_MONO};

pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (a, b) = crate::poly::align(a, b);
    let (a, b) = (a.as_ref(), b.as_ref());
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.space());
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mut m: Mono = ONE_MONO;
    for i in 0..m.len() {
        m[i] = ma[i].min(mb[i]);
    }
    let ga = if ma == ONE_MONO { a.primitive() } else { a.div_mono(&ma).primitive() };
    let gb = if mb == ONE_MONO { b.primitive() } else { b.div_mono(&mb).primitive() };
    let g = gcd_primitive(&ga, &gb);
    if m == ONE_MONO {
        g
    } else {
        g.mul_term(&m, &BigInt::one())
    }
}

/// Gcd of a list; stops early once the result is constant.
pub fn gcd_many<'a, I: IntoIterator<Item = &'a Poly>>(items: I) -> Option<Poly> {
    let mut sorted: Vec<&Poly> = items.into_iter().filter(|p| !p.is_zero()).collect();
    sorted.sort_by_key(|p| p.len());
    let mut it = sorted.into_iter();
    let mut g = it.next()?.primitive();
    for p in it {
        if g.is_one() {
            break;
        }
        g = gcd(&g, p);
    }
    Some(g)
}

/// Content with respect to `v`: gcd of the coefficients in `v`.
pub fn content_in(p: &Poly, v: usize) -> Poly {
    let coeffs = p.coeffs_in(v);
    gcd_many(coeffs.iter()).unwrap_or_else(|| Poly::zero(p.space()))
}

fn normalize(p: Poly) -> Poly {
    p.primitive()
}

fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize(b.clone());
    }
    if b.is_zero() {
        return normalize(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.space());
    }
    if a == b {
        return normalize(a.clone());
    }
    let va = a.var_mask();
    let vb = b.var_mask();
    if va != vb {
        // A variable present in only one operand cannot occur in the gcd.
        let only_a = va & !vb;
        let (p, q, v) = if only_a != 0 {
            (a, b, only_a.trailing_zeros() as usize)
        } else {
            let only_b = vb & !va;
            (b, a, only_b.trailing_zeros() as usize)
        };
        let coeffs = p.coeffs_in(v);
        let mut list: Vec<&Poly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        list.push(q);
        return gcd_many(list).expect("nonempty");
    }
    // Main variable: smallest maximal degree.
    let mut best = usize::MAX;
    let mut best_deg = u32::MAX;
    for v in 0..32 {
        if va & (1 << v) != 0 {
            let d = a.degree(v).max(b.degree(v));
            if d < best_deg {
                best_deg = d;
                best = v;
            }
        }
    }
    let v = best;
    let ca = a.coeffs_in(v);
    let cb = b.coeffs_in(v);
    if coprime_image(a, b, v) {
        let list: Vec<&Poly> = ca.iter().chain(cb.iter()).filter(|c| !c.is_zero()).collect();
        return gcd_many(list).expect("nonempty");
    }
    let cont_a = gcd_many(ca.iter()).expect("nonzero");
    let cont_b = gcd_many(cb.iter()).expect("nonzero");
    let cont = gcd(&cont_a, &cont_b);
    let pa: Vec<Poly> = if cont_a.is_one() {
        ca
    } else {
        ca.iter().map(|c| c.div_exact(&cont_a).expect("content divides")).collect()
    };
    let pb: Vec<Poly> = if cont_b.is_one() {
        cb
    } else {
        cb.iter().map(|c| c.div_exact(&cont_b).expect("content divides")).collect()
    };
    let g = subresultant_gcd(pa, pb);
    let g = if g.len() <= 1 {
        Poly::one(a.space())
    } else {
        let cg = gcd_many(g.iter()).expect("nonzero");
        let prim: Vec<Poly> = g.iter().map(|c| c.div_exact(&cg).expect("content divides")).collect();
        Poly::from_coeffs_in(a.space(), v, &prim)
    };
    normalize(g.mul(&cont))
}

/// True when a modular image proves that `gcd(a, b)` has degree 0 in `v`.
///
/// The image gcd of `a` and `b` at a point where neither leading coefficient
/// vanishes has degree at least that of the true gcd, so degree 0 is a proof.
fn coprime_image(a: &Poly, b: &Poly, v: usize) -> bool {
    let n = a.space().len();
    let lca = a.lc_in(v);
    let lcb = b.lc_in(v);
    for attempt in 0..3u64 {
        let point: Vec<u64> = (0..n)
            .map(|i| modp::sample(attempt * 1_000_003 + i as u64 * 7919 + 17))
            .collect();
        if lca.eval_mod(&point) == 0 || lcb.eval_mod(&point) == 0 {
            continue;
        }
        let ua = a.univariate_mod(v, &point);
        let ub = b.univariate_mod(v, &point);
        return modp::gcd_degree(&ua, &ub) == 0;
    }
    false
}

fn trim(mut v: Vec<Poly>) -> Vec<Poly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` on coefficient lists.
pub(crate) fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = b.len() - 1;
    let lcb = &b[n];
    let mut r: Vec<Poly> = a.to_vec();
    let mut e = (a.len() - 1) as i64 - n as i64 + 1;
    while r.len() > n && !r.is_empty() {
        let d = r.len() - 1;
        let lr = r[d].clone();
        for c in r.iter_mut() {
            *c = c.mul(lcb);
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = j + d - n;
            r[idx] = r[idx].sub(&lr.mul(bj));
        }
        debug_assert!(r[d].is_zero());
        r = trim(r);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lcb.pow(e as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Subresultant PRS; returns the last nonzero remainder (not made primitive).
fn subresultant_gcd(a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let space = a[0].space().clone();
    let mut g = Poly::one(&space);
    let mut h = Poly::one(&space);
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![Poly::one(&space)];
        }
        let divisor = g.mul(&h.pow(delta));
        a = b;
        b = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a.last().expect("nonempty").clone();
        h = if delta == 0 {
            h
        } else if delta == 1 {
            g.clone()
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
}

/// Exact quotient that must succeed.
pub(crate) fn div(a: &Poly, b: &Poly) -> Poly {
    a.div_exact(b).expect("exact division")
}

/// Least common multiple (primitive, positive leading coefficient).
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.space());
    }
    let g = gcd(a, b);
    div(&a.primitive(), &g).mul(&b.primitive())
}

pub(crate) fn is_unit(p: &Poly) -> bool {
    p.is_constant() && !p.is_zero()
}

#[allow(dead_code)]
pub(crate) fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    if a.is_zero() {
        return b.clone();
    }
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Space;

    fn parse(s: &str) -> Poly {
        let sp = Space::new(&["x", "y", "z"]).unwrap();
        crate::parse::parse_poly(s, &sp).unwrap()
    }

    #[test]
    fn shared_factor_is_found() {
        let g = parse("x*y + z^2 - 3");
        let a = g.mul(&parse("x - y + 1"));
        let b = g.mul(&parse("x^2 + z"));
        assert_eq!(gcd(&a, &b), g);
    }

    #[test]
    fn coprime_inputs_give_one() {
        assert!(gcd(&parse("x^2 + y"), &parse("x + y^2")).is_one());
    }

    #[test]
    fn monomial_and_integer_content() {
        let a = parse("6*x^2*y - 4*x*y^2");
        let b = parse("9*x*y^3");
        assert_eq!(gcd(&a, &b), parse("x*y"));
    }

    #[test]
    fn repeated_factors() {
        let f = parse("x - y*z + 2");
        let a = f.pow(3).mul(&parse("x + 1"));
        let b = f.pow(2).mul(&parse("y - 1"));
        assert_eq!(gcd(&a, &b), f.pow(2));
    }

    #[test]
    fn sign_is_normalized() {
        let a = parse("-(x - y)*(x + 2)");
        let b = parse("(y - x)*(x + 3)");
        assert_eq!(gcd(&a, &b), parse("x - y"));
    }
}
