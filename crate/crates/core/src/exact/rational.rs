//! Exact rational scalars.
//!
//! `Rational` is always stored in lowest terms with a positive denominator;
//! its `Display` form is `p/q`, or just `p` when the denominator is one.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The real `k`-th root of `q` when it is rational.
///
/// For even `k` the positive root is returned and negative input yields
/// `None`.
pub fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    assert!(k > 0);
    if q.is_zero() {
        return Some(Rational::zero());
    }
    if k % 2 == 0 && q.is_negative() {
        return None;
    }
    let root_int = |x: &BigInt| -> Option<BigInt> {
        let r = x.magnitude().nth_root(k);
        if r.pow(k) == *x.magnitude() {
            Some(BigInt::from_biguint(Sign::Plus, r))
        } else {
            None
        }
    };
    let p = root_int(q.numer())?;
    let d = root_int(q.denom())?;
    let r = Rational::new(p, d);
    Some(if q.is_negative() { -r } else { r })
}

/// Integer power with a possibly negative exponent. Panics on `0^(-k)`.
pub fn powi(q: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= q;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}
