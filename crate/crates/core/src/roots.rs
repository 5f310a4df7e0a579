//! Exact square roots and rational roots of polynomials over Q(rest).
//!
//! Roots of a polynomial in `v` are searched among rational functions of the
//! other variables: linear factors directly, quadratics through an exact
//! square root of the discriminant, and higher degrees by testing candidates
//! `±(divisor of trailing coefficient)/(divisor of leading coefficient)`
//! built from a partial factorization (integer primes, monomials and
//! recursively found linear factors). Every accepted root is verified by exact
//! division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gcd::{self, content_in, gcd};
use crate::modp;
use crate::poly::{mono_div, Mono, Poly, ONE_MONO};
use crate::ratfunc::RatFunc;

const CANDIDATE_LIMIT: usize = 200_000;
const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of an integer polynomial with positive leading coefficient.
pub fn poly_sqrt(p: &Poly) -> Option<Poly> {
    if p.is_zero() {
        return Some(p.clone());
    }
    let (m0, c0) = &p.terms()[0];
    if !c0.is_positive() || m0.iter().any(|e| e % 2 == 1) {
        return None;
    }
    let mut lead: Mono = ONE_MONO;
    for i in 0..lead.len() {
        lead[i] = m0[i] / 2;
    }
    let lead_c = int_sqrt_exact(c0)?;
    let max_deg = p.total_degree() / 2;
    let two_lead_c = &lead_c * 2;
    let sp = p.space().clone();
    let mut root = Poly::monomial(&sp, lead, lead_c);
    let mut last = lead;
    let mut rem = p.sub(&root.mul(&root));
    while let Some((m, c)) = rem.terms().first() {
        let tm = mono_div(m, &lead)?;
        if tm >= last || tm.iter().map(|&e| e as u32).sum::<u32>() > max_deg {
            return None;
        }
        let (tc, r) = c.div_rem(&two_lead_c);
        if !r.is_zero() {
            return None;
        }
        let t = Poly::monomial(&sp, tm, tc);
        // rem -= t * (2 root + t)
        rem = rem.sub(&t.mul(&root.scale(&BigInt::from(2)).add(&t)));
        root = root.add(&t);
        last = tm;
    }
    Some(root)
}

/// Square root of a rational function, normalized to a positive scalar.
pub fn sqrt(f: &RatFunc) -> Option<RatFunc> {
    if f.is_zero() {
        return Some(f.clone());
    }
    let s = f.scalar();
    if s.is_negative() {
        return None;
    }
    let sn = int_sqrt_exact(s.numer())?;
    let sd = int_sqrt_exact(s.denom())?;
    let n = poly_sqrt(f.num())?;
    let d = poly_sqrt(f.den())?;
    let r = RatFunc::new(n, d).ok()?;
    Some(r.scale(&BigRational::new(sn, sd)))
}

/// Square-free decomposition in `v` (Yun). Factors are primitive in `v` and
/// have positive degree; the `v`-free content is dropped.
pub fn squarefree(p: &Poly, v: usize) -> Vec<(Poly, u32)> {
    if p.degree(v) == 0 {
        return Vec::new();
    }
    let c = content_in(p, v);
    let f = if c.is_one() { p.primitive() } else { gcd::div(p, &c).primitive() };
    let fp = f.derivative(v);
    let a0 = gcd(&f, &fp);
    let mut b = gcd::div(&f, &a0);
    let c = gcd::div(&fp, &a0);
    let mut d = c.sub(&b.derivative(v));
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree(v) > 0 {
        let a = gcd(&b, &d);
        let b2 = gcd::div(&b, &a);
        let c2 = if d.is_zero() { d.clone() } else { gcd::div(&d, &a) };
        d = c2.sub(&b2.derivative(v));
        if a.degree(v) > 0 {
            out.push((a, i));
        }
        b = b2;
        i += 1;
    }
    out
}

/// Result of a root search: rational roots found and the factors left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    pub roots: Vec<(RatFunc, u32)>,
    pub leftover: Vec<(Poly, u32)>,
}

/// All roots in `v` that are rational functions of the other variables,
/// together with the factors in which no root was found.
pub fn split_roots(p: &Poly, v: usize) -> Result<RootSplit> {
    if p.is_zero() {
        return Err(Error::NonRationalRoot("zero polynomial".into()));
    }
    let mut roots = Vec::new();
    let mut leftover = Vec::new();
    let k = p.monomial_content()[v];
    let mut q = p.clone();
    if k > 0 {
        roots.push((RatFunc::zero(p.space()), k as u32));
        let mut m = ONE_MONO;
        m[v] = k;
        q = q.div_mono(&m);
    }
    for (s, mult) in squarefree(&q, v) {
        let (rs, left) = solve_squarefree(&s, v)?;
        roots.extend(rs.into_iter().map(|r| (r, mult)));
        if let Some(l) = left {
            leftover.push((l, mult));
        }
    }
    Ok(RootSplit { roots, leftover })
}

/// Rational roots with multiplicity; errors if any factor has no rational root.
pub fn rational_roots(p: &Poly, v: usize) -> Result<Vec<(RatFunc, u32)>> {
    let split = split_roots(p, v)?;
    if let Some((l, _)) = split.leftover.first() {
        return Err(Error::NonRationalRoot(format!("factor {l} has no root in the coefficient field")));
    }
    Ok(split.roots)
}

fn solve_squarefree(s: &Poly, v: usize) -> Result<(Vec<RatFunc>, Option<Poly>)> {
    let deg = s.degree(v);
    let c = s.coeffs_in(v);
    match deg {
        0 => Ok((Vec::new(), None)),
        1 => Ok((vec![RatFunc::new(c[0].neg(), c[1].clone())?], None)),
        2 => {
            let disc = c[1].mul(&c[1]).sub(&c[2].mul(&c[0]).scale(&BigInt::from(4)));
            match sqrt(&RatFunc::from_poly(&disc)) {
                Some(dr) => {
                    let two_a = RatFunc::from_poly(&c[2].scale(&BigInt::from(2)));
                    let mb = RatFunc::from_poly(&c[1].neg());
                    let r1 = mb.add(&dr).checked_div(&two_a)?;
                    let r2 = mb.sub(&dr).checked_div(&two_a)?;
                    Ok((vec![r1, r2], None))
                }
                None => Ok((Vec::new(), Some(s.clone()))),
            }
        }
        _ => match find_candidate_root(s, v)? {
            Some((root, factor)) => {
                let rest = gcd::div(s, &factor);
                let (mut more, left) = solve_squarefree(&rest, v)?;
                more.insert(0, root);
                Ok((more, left))
            }
            None => Ok((Vec::new(), Some(s.clone()))),
        },
    }
}

/// Search `±n/d` with `n | c_0` and `d | c_deg`. Returns the root and the
/// primitive linear factor `d v ∓ n`.
fn find_candidate_root(s: &Poly, v: usize) -> Result<Option<(RatFunc, Poly)>> {
    let coeffs = s.coeffs_in(v);
    let deg = coeffs.len() - 1;
    let tail = factor_partial(&coeffs[0]);
    let head = factor_partial(&coeffs[deg]);
    let count = |atoms: &[(Poly, u32)]| atoms.iter().map(|(_, e)| (*e as usize) + 1).product::<usize>();
    let total = count(&tail).saturating_mul(count(&head)).saturating_mul(2);
    if total > CANDIDATE_LIMIT {
        return Err(Error::SearchLimit(CANDIDATE_LIMIT));
    }
    let n = s.space().len();
    let points: Vec<Vec<u64>> = (0..2u64)
        .map(|k| (0..n).map(|i| modp::sample(0xC0FFEE + k * 104_729 + i as u64 * 31)).collect())
        .collect();
    let coeff_vals: Vec<Vec<u64>> =
        points.iter().map(|pt| coeffs.iter().map(|c| c.eval_mod(pt)).collect()).collect();
    let tail_vals: Vec<Vec<u64>> =
        points.iter().map(|pt| tail.iter().map(|(a, _)| a.eval_mod(pt)).collect()).collect();
    let head_vals: Vec<Vec<u64>> =
        points.iter().map(|pt| head.iter().map(|(a, _)| a.eval_mod(pt)).collect()).collect();
    let tail_divs = exponent_vectors(&tail);
    let head_divs = exponent_vectors(&head);
    let value = |vals: &[u64], exps: &[u32]| {
        vals.iter().zip(exps).fold(1u64, |acc, (&x, &e)| modp::mul(acc, modp::pow(x, e as u64)))
    };
    for de in &head_divs {
        for ne in &tail_divs {
            for sign in [1i64, -1] {
                let mut ok = true;
                for k in 0..points.len() {
                    let d = value(&head_vals[k], de);
                    let mut num = value(&tail_vals[k], ne);
                    if sign < 0 {
                        num = modp::sub(0, num);
                    }
                    if d == 0 {
                        continue;
                    }
                    // d^deg s(num/d) = sum c_k num^k d^(deg-k)
                    let mut acc = 0;
                    for (j, &cv) in coeff_vals[k].iter().enumerate() {
                        let t = modp::mul(cv, modp::mul(modp::pow(num, j as u64), modp::pow(d, (deg - j) as u64)));
                        acc = modp::add(acc, t);
                    }
                    if acc != 0 {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let dp = build(&head, de, s);
                let mut np = build(&tail, ne, s);
                if sign < 0 {
                    np = np.neg();
                }
                let factor = Poly::var(s.space(), v).mul(&dp).sub(&np).primitive();
                if s.div_exact(&factor).is_some() {
                    return Ok(Some((RatFunc::new(np, dp)?, factor)));
                }
            }
        }
    }
    Ok(None)
}

fn build(atoms: &[(Poly, u32)], exps: &[u32], like: &Poly) -> Poly {
    atoms
        .iter()
        .zip(exps)
        .fold(Poly::one(like.space()), |acc, ((a, _), &e)| if e == 0 { acc } else { acc.mul(&a.pow(e)) })
}

fn exponent_vectors(atoms: &[(Poly, u32)]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for (_, e) in atoms {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for v in &out {
            for k in 0..=*e {
                let mut w = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Partial factorization into atoms with exponents: integer primes (up to a
/// trial-division bound), single variables, linear factors found by root
/// search in each variable, and whatever remains. Signs are dropped.
pub fn factor_partial(p: &Poly) -> Vec<(Poly, u32)> {
    let sp = p.space().clone();
    let mut atoms: Vec<(Poly, u32)> = Vec::new();
    if p.is_zero() {
        return atoms;
    }
    let content = p.content().abs();
    for (prime, e) in factor_integer(&content) {
        atoms.push((Poly::constant(&sp, prime), e));
    }
    let mut q = p.primitive();
    let m = q.monomial_content();
    for (i, &e) in m.iter().enumerate() {
        if e > 0 {
            atoms.push((Poly::var(&sp, i), e as u32));
        }
    }
    if m != ONE_MONO {
        q = q.div_mono(&m);
    }
    for v in 0..sp.len() {
        if q.is_constant() {
            break;
        }
        if !q.contains_var(v) {
            continue;
        }
        let Ok(split) = split_roots(&q, v) else { continue };
        for (r, mult) in split.roots {
            let lin = Poly::var(&sp, v).mul(r.den()).scale(r.scalar().denom());
            let lin = lin.sub(&r.num().scale(r.scalar().numer())).primitive();
            for _ in 0..mult {
                match q.div_exact(&lin) {
                    Some(rest) => q = rest,
                    None => break,
                }
            }
            atoms.push((lin, mult));
        }
    }
    if !q.is_constant() {
        atoms.push((q.primitive(), 1));
    }
    atoms
}

/// Prime factorization by trial division; a cofactor above the bound is kept whole.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

fn integer_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor_integer(n) {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

/// True if some integer specialization of the other variables leaves a
/// polynomial in `v` of the same degree with no rational root. Such a
/// specialization proves that `p` has no root in Q(other variables).
/// A `false` answer proves nothing.
pub fn certify_no_root(p: &Poly, v: usize) -> bool {
    let deg = p.degree(v);
    if deg == 0 {
        return true;
    }
    let others: Vec<usize> = (0..p.space().len()).filter(|&i| i != v && p.contains_var(i)).collect();
    let lc = p.lc_in(v);
    const VALUES: [i64; 8] = [2, 3, 5, -2, 7, -3, 11, 13];
    for attempt in 0..24usize {
        let assignment: Vec<(usize, BigInt)> = others
            .iter()
            .enumerate()
            .map(|(k, &i)| (i, BigInt::from(VALUES[(attempt + 3 * k) % VALUES.len()] + (attempt / 8) as i64)))
            .collect();
        if lc.specialize_int(&assignment).is_zero() {
            continue;
        }
        let u = p.specialize_int(&assignment);
        let coeffs: Vec<BigInt> = u.coeffs_in(v).iter().map(|c| c.constant_value().expect("univariate")).collect();
        if coeffs[0].is_zero() {
            continue;
        }
        if !has_rational_root(&coeffs) {
            return true;
        }
    }
    false
}

fn has_rational_root(coeffs: &[BigInt]) -> bool {
    let lead = coeffs.last().expect("nonempty");
    if lead.abs().to_u64().is_none_or(|x| x > 1 << 40) || coeffs[0].abs().to_u64().is_none_or(|x| x > 1 << 40) {
        // Too large to enumerate divisors cheaply; no certificate from this point.
        return true;
    }
    for d in integer_divisors(lead) {
        for n in integer_divisors(&coeffs[0]) {
            for s in [1, -1] {
                let x = BigRational::new(&n * s, d.clone());
                let val = coeffs
                    .iter()
                    .rev()
                    .fold(BigRational::zero(), |acc, c| acc * &x + BigRational::from_integer(c.clone()));
                if val.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::Space;

    fn p(s: &str) -> Poly {
        parse_poly(s, &Space::standard()).unwrap()
    }

    fn r(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    fn z() -> usize {
        Space::standard().index("z").unwrap()
    }

    #[test]
    fn square_roots() {
        assert_eq!(poly_sqrt(&p("(a*b+2*c-1)^2")), Some(p("a*b+2*c-1")));
        assert_eq!(poly_sqrt(&p("b^2+1")), None);
        assert_eq!(sqrt(&r("9*(a-1/2)^2/(4*b^2)")), Some(r("3*(a-1/2)/(2*b)")));
        assert_eq!(sqrt(&r("-b^2")), None);
    }

    #[test]
    fn squarefree_splits_multiplicities() {
        let f = p("(z-b)^3*(z+1)*(z^2+b)");
        let sf = squarefree(&f, z());
        assert_eq!(sf, vec![(p("z^3+z^2+b*z+b"), 1), (p("z-b"), 3)]);
    }

    #[test]
    fn quadratic_and_cubic_roots() {
        let roots = rational_roots(&p("(b*z+1)*(z+b)*z^2"), z()).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&(r("0"), 2)));
        assert!(roots.contains(&(r("-b"), 1)));
        assert!(roots.contains(&(r("-1/b"), 1)));
        let cubic = p("(2*z-b)*(z+3*a)*(b*z-a+1)");
        let roots = rational_roots(&cubic, z()).unwrap();
        let mut got: Vec<RatFunc> = roots.into_iter().map(|x| x.0).collect();
        got.sort_by_key(|x| x.to_string());
        let mut want = vec![r("b/2"), r("-3*a"), r("(a-1)/b")];
        want.sort_by_key(|x| x.to_string());
        assert_eq!(got, want);
    }

    #[test]
    fn irrational_roots_are_rejected() {
        let f = p("3*z^2+2*(2*b-1)*z+4*b+12-4*b^2+3");
        assert!(matches!(rational_roots(&f, z()), Err(Error::NonRationalRoot(_))));
    }

    #[test]
    fn certificate_of_no_root() {
        assert!(certify_no_root(&p("z^3-b"), z()));
        assert!(!certify_no_root(&p("(z-b)*(z^2+1)"), z()));
    }

    #[test]
    fn integer_factorization() {
        assert_eq!(
            factor_integer(&BigInt::from(360)),
            vec![(BigInt::from(2), 3), (BigInt::from(3), 2), (BigInt::from(5), 1)]
        );
    }
}
