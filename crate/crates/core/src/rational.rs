//! Exact rational arithmetic helpers.
//!
//! All geometry in the generative models runs on `BigRational`: arbitrary
//! precision, always in lowest terms, denominator kept positive. Nothing in
//! this crate touches floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"n"` or `"n/d"` with optional leading sign.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = text.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Smallest non-negative integer `k` with `k*k >= r`, for `r >= 0`.
///
/// Used for exact ceiling bounds of the form `ceil(sqrt(r))` without ever
/// leaving integer arithmetic.
pub fn ceil_sqrt(r: &Rat) -> BigInt {
    assert!(!r.is_negative(), "ceil_sqrt of a negative rational");
    if r.is_zero() {
        return BigInt::zero();
    }
    // Floor of sqrt(numer/denom) via integer sqrt, then correct upward.
    let mut k = num_integer::Roots::sqrt(&(r.numer() / r.denom()));
    while Rat::from_integer(&k * &k) < *r {
        k += BigInt::one();
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["0", "5", "-3", "1/2", "-4/3", "7/2"] {
            let r = parse_rat(text).unwrap();
            assert_eq!(r.to_string(), text);
        }
        // Reduction and sign canonicalization.
        assert_eq!(parse_rat("2/4").unwrap().to_string(), "1/2");
        assert_eq!(parse_rat("1/-2").unwrap().to_string(), "-1/2");
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn ceil_sqrt_exact_values() {
        assert_eq!(ceil_sqrt(&rat_int(0)), BigInt::from(0));
        assert_eq!(ceil_sqrt(&rat_int(1)), BigInt::from(1));
        assert_eq!(ceil_sqrt(&rat_int(2)), BigInt::from(2));
        assert_eq!(ceil_sqrt(&rat_int(4)), BigInt::from(2));
        assert_eq!(ceil_sqrt(&rat(25, 1)), BigInt::from(5));
        assert_eq!(ceil_sqrt(&rat(1, 2)), BigInt::from(1));
        assert_eq!(ceil_sqrt(&rat(50, 1)), BigInt::from(8)); // 7^2=49 < 50 <= 64
    }
}
