//! Arbitrary-precision rational numbers and small helpers.
//!
//! All parameter values, polynomial coefficients and identity checks in this
//! crate are exact rationals; floating point enters only in the numeric
//! verification layer (quadrature, finite differences).

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// n/d as an exact rational. Panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer n as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "10/3", "-7", "0" exactly. Rejects floats and empty strings.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Domain("empty rational literal".into()));
    }
    Rational::from_str(t).map_err(|e| Error::Domain(format!("bad rational '{t}': {e}")))
}

/// Greatest integer strictly below `a`.
pub fn floor_strict(a: &Rational) -> BigInt {
    if a.is_integer() {
        a.to_integer() - BigInt::one()
    } else {
        a.floor().to_integer()
    }
}

pub fn is_integer(a: &Rational) -> bool {
    a.is_integer()
}

/// True when 2a is an integer (integer or half-odd-integer a).
pub fn is_half_integer(a: &Rational) -> bool {
    (a + a).is_integer()
}

/// Signed integer power.
pub fn pow_i(a: &Rational, k: i64) -> Rational {
    if k >= 0 {
        num_traits::pow::pow(a.clone(), k as usize)
    } else {
        num_traits::pow::pow(a.recip(), (-k) as usize)
    }
}

/// Rational to f64, robust against numerator/denominator overflowing f64
/// individually (keeps ~63 bits of the quotient).
pub fn to_f64(a: &Rational) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    let num = a.numer();
    let den = a.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // scale so that num*2^k/den has about 63 bits
    let k = 63 - (nb - db);
    let (n, d) = if k >= 0 {
        (num << (k as u64), den.clone())
    } else {
        (num.clone(), den << ((-k) as u64))
    };
    let q = &n / &d;
    let m = q.to_f64().unwrap_or(if q.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    m * 2f64.powi(-k as i32)
}

/// Deterministic float formatting with 17 significant digits.
pub fn fmt17(x: f64) -> String {
    format!("{:.16e}", x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_floor() {
        assert_eq!(floor_strict(&rat(10, 3)), BigInt::from(3));
        assert_eq!(floor_strict(&rint(3)), BigInt::from(2));
        assert_eq!(floor_strict(&rat(-1, 2)), BigInt::from(-1));
    }

    #[test]
    fn parse_roundtrip() {
        assert_eq!(parse_rational("10/3").unwrap(), rat(10, 3));
        assert_eq!(parse_rational(" -7 ").unwrap(), rint(-7));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn big_ratio_to_f64() {
        // both parts far beyond f64 range, quotient is 100
        let big = BigInt::from(10).pow(400u32);
        let r = Rational::new(&big * BigInt::from(100), big.clone());
        assert!((to_f64(&r) - 100.0).abs() < 1e-12);
        let tiny = Rational::new(BigInt::one(), BigInt::from(10).pow(400u32));
        assert_eq!(to_f64(&tiny), 0.0); // underflows cleanly
        assert!(to_f64(&Rational::new(big, BigInt::one())).is_infinite());
    }

    #[test]
    fn half_integers() {
        assert!(is_half_integer(&rat(7, 2)));
        assert!(is_half_integer(&rint(4)));
        assert!(!is_half_integer(&rat(10, 3)));
    }
}
