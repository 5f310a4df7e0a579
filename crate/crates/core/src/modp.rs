//! Arithmetic modulo the Mersenne prime 2^61 - 1, used for fast probabilistic
//! filters whose negative answers are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    let prod = (a as u128) * (b as u128);
    let lo = (prod as u64) & P;
    let hi = (prod >> 61) as u64;
    add(lo, hi)
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

pub fn from_bigint(n: &BigInt) -> u64 {
    if let Some(v) = n.to_i64() {
        let r = v.rem_euclid(P as i64);
        return r as u64;
    }
    let m = n.mod_floor(&BigInt::from(P));
    m.to_u64().expect("residue fits in u64")
}

/// Deterministic pseudo-random residues (splitmix64).
pub fn sample(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    z % P
}

/// Degree of the gcd of two dense univariate polynomials (coefficients in
/// increasing degree, trailing entries nonzero).
pub fn gcd_degree(a: &[u64], b: &[u64]) -> usize {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv_lc = inv(b[db]);
    while r.len() > db {
        let dr = r.len() - 1;
        let f = mul(r[dr], inv_lc);
        let shift = dr - db;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = sub(r[shift + j], mul(f, bj));
        }
        r.pop();
        r = trim(r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        for a in [1u64, 2, 12345, P - 1] {
            assert_eq!(mul(a, inv(a)), 1);
        }
    }

    #[test]
    fn negative_bigints_reduce() {
        assert_eq!(from_bigint(&BigInt::from(-1)), P - 1);
        assert_eq!(from_bigint(&BigInt::from(-2)), P - 2);
    }

    #[test]
    fn gcd_degree_of_shared_factor() {
        // (x-1)(x-2) and (x-1)(x+5)
        let a = [2, sub(0, 3), 1];
        let b = [sub(0, 5), 4, 1];
        assert_eq!(gcd_degree(&a, &b), 1);
        assert_eq!(gcd_degree(&[1, 1], &[2, 1]), 0);
    }
}
