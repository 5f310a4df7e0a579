//! Canonical text output in the parser's grammar.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{Mono, Poly, ONE_MONO};
use crate::ratfunc::RatFunc;
use crate::space::Space;

fn write_mono(out: &mut String, m: &Mono, space: &Space) {
    let mut first = true;
    for (i, &e) in m.iter().enumerate().take(space.len()) {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(space.name(i));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Terms `c_i * m_i` with rational coefficients; `scale` multiplies every coefficient.
fn write_sum(out: &mut String, p: &Poly, scale: &BigRational) {
    if p.is_zero() || scale.is_zero() {
        out.push('0');
        return;
    }
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let coeff = scale * BigRational::from_integer(c.clone());
        let neg = coeff.is_negative();
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let a = coeff.abs();
        if *m == ONE_MONO {
            write_rational(out, &a);
        } else {
            if !a.is_one() {
                write_rational(out, &a);
                out.push('*');
            }
            write_mono(out, m, p.space());
        }
    }
}

fn write_rational(out: &mut String, q: &BigRational) {
    out.push_str(&q.numer().to_string());
    if !q.denom().is_one() {
        out.push('/');
        out.push_str(&q.denom().to_string());
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_sum(&mut s, self, &BigRational::one());
        f.write_str(&s)
    }
}

fn is_bare_power(p: &Poly) -> bool {
    match p.terms() {
        [(m, c)] => c.is_one() && m.iter().filter(|&&e| e > 0).count() == 1,
        _ => false,
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.is_zero() {
            return f.write_str("0");
        }
        let sc = self.scalar();
        if self.den().is_one() {
            write_sum(&mut s, self.num(), sc);
            return f.write_str(&s);
        }
        // Numerator carries the scalar's numerator, the denominator its denominator.
        let top = BigRational::from_integer(sc.numer().clone());
        let bottom = self.den().scale(sc.denom());
        if self.num().len() == 1 {
            write_sum(&mut s, self.num(), &top);
        } else {
            if top.is_negative() {
                s.push('-');
            }
            let a = top.abs();
            if !a.is_one() {
                write_rational(&mut s, &a);
                s.push('*');
            }
            s.push('(');
            write_sum(&mut s, self.num(), &BigRational::one());
            s.push(')');
        }
        s.push('/');
        if is_bare_power(&bottom) {
            write_sum(&mut s, &bottom, &BigRational::one());
        } else {
            s.push('(');
            write_sum(&mut s, &bottom, &BigRational::one());
            s.push(')');
        }
        f.write_str(&s)
    }
}
