//! Exact rational helpers shared across the crate.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Falling factorial m (m-1) ... (m-k+1).
pub fn falling(m: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(m - j))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

/// Binomial coefficient C(x, k) for an arbitrary rational top argument.
pub fn binomial_rational(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * (x - int(j as i64)) / int(j as i64 + 1);
    }
    acc
}

/// Renders as `p/q` with an explicit denominator, so `2` is `2/1`.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Renders in parser syntax: `p` for integers, `p/q` otherwise.
pub fn to_literal(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_unit_magnitude(r: &Rational) -> bool {
    r.is_integer() && r.numer().abs().is_one()
}

pub fn to_u64(r: &Rational) -> Option<u64> {
    if r.is_integer() && !r.is_negative() {
        r.numer().to_u64()
    } else {
        None
    }
}
