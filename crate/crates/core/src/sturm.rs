//! Exact real-root counting by Sturm sequences.
//!
//! The chain is computed over integers (denominators cleared, primitive parts
//! taken after each pseudo-remainder) so coefficient growth stays polynomial.
//! Counts are of distinct real roots; multiplicities are collapsed by the
//! initial square-free reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::rational::Rational;

/// An open interval with optionally infinite endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct OpenInterval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl OpenInterval {
    pub fn new(lo: Option<Rational>, hi: Option<Rational>) -> Result<Self> {
        if let (Some(a), Some(b)) = (&lo, &hi) {
            if a >= b {
                return Err(Error::Domain(format!("empty interval ({a}, {b})")));
            }
        }
        Ok(Self { lo, hi })
    }

    pub fn full() -> Self {
        Self { lo: None, hi: None }
    }

    pub fn above(lo: Rational) -> Self {
        Self { lo: Some(lo), hi: None }
    }

    pub fn bounded(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(Some(lo), Some(hi))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.as_ref().map_or(true, |a| a < x) && self.hi.as_ref().map_or(true, |b| x < b)
    }
}

type IPoly = Vec<BigInt>; // ascending, trimmed

fn trim(p: &mut IPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &IPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn content(p: &IPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn primitive(mut p: IPoly) -> IPoly {
    let g = content(&p);
    if !g.is_one() {
        for c in &mut p {
            *c /= &g;
        }
    }
    p
}

/// Clears denominators; the positive scaling leaves signs everywhere intact.
fn to_int_poly(p: &PolyQ) -> Result<IPoly> {
    let coeffs = p.real_coeffs().map_err(|_| {
        Error::Domain("Sturm counting requires a real-flagged polynomial".into())
    })?;
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let mut out: IPoly = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    trim(&mut out);
    Ok(out)
}

fn derivative(p: &IPoly) -> IPoly {
    let mut out: IPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();
    trim(&mut out);
    out
}

/// Pseudo-remainder of a by b, scaled by a positive power of |lc(b)| so the
/// sign pattern matches the true remainder.
fn signed_prem(a: &IPoly, b: &IPoly) -> IPoly {
    let db = degree(b).expect("nonzero divisor");
    let lc = b.last().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let shift = dr - db;
        let rl = r.last().unwrap().clone();
        // r <- lc*r - rl * x^shift * b, then fix sign if lc < 0
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= bc * &rl;
        }
        if lc.is_negative() {
            for c in r.iter_mut() {
                *c = -c.clone();
            }
        }
        trim(&mut r);
    }
    r
}

fn int_gcd_poly(a: &IPoly, b: &IPoly) -> IPoly {
    let mut a = primitive(a.clone());
    let mut b = primitive(b.clone());
    while !b.is_empty() {
        let r = primitive(signed_prem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Square-free part followed by the Sturm chain with primitive-part
/// reduction at every step.
fn sturm_chain(p: &IPoly) -> Vec<IPoly> {
    let dp = derivative(p);
    let sf = if dp.is_empty() {
        primitive(p.clone())
    } else {
        let g = int_gcd_poly(p, &dp);
        if degree(&g) == Some(0) {
            primitive(p.clone())
        } else {
            // exact division p/g over the rationals, re-cleared to integers
            let pq = PolyQ::from_real(p.iter().map(|c| Rational::from_integer(c.clone())).collect());
            let gq = PolyQ::from_real(g.iter().map(|c| Rational::from_integer(c.clone())).collect());
            let q = pq.try_exact_div(&gq).expect("gcd divides");
            primitive(to_int_poly(&q).expect("real"))
        }
    };
    let mut chain = vec![sf.clone()];
    let d = derivative(&sf);
    if d.is_empty() {
        return chain;
    }
    chain.push(primitive(d));
    loop {
        let n = chain.len();
        let r = signed_prem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        let mut neg = primitive(r);
        for c in neg.iter_mut() {
            *c = -c.clone();
        }
        chain.push(neg);
    }
    chain
}

/// Sign of p at a rational point, computed without constructing big
/// rationals: sum of a_k n^k d^(deg-k).
fn sign_at(p: &IPoly, x: &Rational) -> i8 {
    if p.is_empty() {
        return 0;
    }
    let n = x.numer();
    let d = x.denom();
    let deg = p.len() - 1;
    let mut acc = BigInt::zero();
    let mut npow = BigInt::one();
    let mut dpows = vec![BigInt::one(); deg + 1];
    for k in 1..=deg {
        dpows[k] = &dpows[k - 1] * d;
    }
    for (k, c) in p.iter().enumerate() {
        acc += c * &npow * &dpows[deg - k];
        npow *= n;
    }
    sign_of(&acc)
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_inf(p: &IPoly, positive_end: bool) -> i8 {
    match degree(p) {
        None => 0,
        Some(d) => {
            let s = sign_of(p.last().unwrap());
            if positive_end || d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

fn variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn chain_signs(chain: &[IPoly], at: &Option<Rational>, positive_end: bool) -> Vec<i8> {
    chain
        .iter()
        .map(|p| match at {
            Some(x) => sign_at(p, x),
            None => sign_at_inf(p, positive_end),
        })
        .collect()
}

/// Exact number of distinct real roots of `p` in the open interval.
pub fn sturm_count_roots(p: &PolyQ, iv: &OpenInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("root count of the zero polynomial".into()));
    }
    let ip = to_int_poly(p)?;
    if degree(&ip).unwrap_or(0) == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&ip);
    let va = variations(&chain_signs(&chain, &iv.lo, false));
    let vb = variations(&chain_signs(&chain, &iv.hi, true));
    let mut count = va.saturating_sub(vb);
    // V(a)-V(b) counts roots in (a, b]; drop a root sitting exactly at b
    if let Some(b) = &iv.hi {
        if sign_at(&chain[0], b) == 0 {
            count = count.saturating_sub(1);
        }
    }
    Ok(count)
}

/// True when the (finite) point is a root of p.
pub fn is_root(p: &PolyQ, x: &Rational) -> Result<bool> {
    Ok(p.eval_real(x)
        .map_err(|_| Error::Domain("real polynomial required".into()))?
        .is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    #[test]
    fn no_real_roots() {
        let p = PolyQ::from_i64(&[1, 0, 1]); // x^2 + 1
        assert_eq!(sturm_count_roots(&p, &OpenInterval::full()).unwrap(), 0);
    }

    #[test]
    fn two_roots_in_window() {
        let p = PolyQ::from_i64(&[-1, 0, 1]); // x^2 - 1
        let iv = OpenInterval::bounded(rint(-2), rint(2)).unwrap();
        assert_eq!(sturm_count_roots(&p, &iv).unwrap(), 2);
        // open interval excludes endpoint roots
        let iv = OpenInterval::bounded(rint(-1), rint(1)).unwrap();
        assert_eq!(sturm_count_roots(&p, &iv).unwrap(), 0);
        let iv = OpenInterval::bounded(rint(0), rint(1)).unwrap();
        assert_eq!(sturm_count_roots(&p, &iv).unwrap(), 0);
    }

    #[test]
    fn multiple_roots_collapse() {
        // (x-1)^2 (x+2)
        let p = &PolyQ::from_i64(&[-1, 1]).pow(2) * &PolyQ::from_i64(&[2, 1]);
        assert_eq!(sturm_count_roots(&p, &OpenInterval::full()).unwrap(), 2);
    }

    #[test]
    fn half_infinite() {
        let p = PolyQ::from_i64(&[-2, 0, 1]); // roots +-sqrt(2)
        assert_eq!(
            sturm_count_roots(&p, &OpenInterval::above(rint(0))).unwrap(),
            1
        );
        assert_eq!(
            sturm_count_roots(&p, &OpenInterval::new(None, Some(rat(-3, 2))).unwrap()).unwrap(),
            0
        );
    }

    #[test]
    fn zero_poly_rejected() {
        assert!(sturm_count_roots(&PolyQ::zero(), &OpenInterval::full()).is_err());
    }
}
