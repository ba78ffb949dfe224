//! Univariate polynomials over the Gaussian rationals.
//!
//! Coefficients are stored in ascending power order with no trailing zeros.
//! Wronskians of polynomial lists and exact proportionality tests are the
//! workhorses of the denominator-polynomial construction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<GaussianRational>,
}

impl PolyQ {
    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_gauss(vec![c])
    }

    pub fn constant_rat(c: Rational) -> Self {
        Self::constant(GaussianRational::from_rational(c))
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::monomial(1, GaussianRational::one())
    }

    pub fn monomial(k: usize, c: GaussianRational) -> Self {
        let mut v = vec![GaussianRational::zero(); k + 1];
        v[k] = c;
        Self::from_gauss(v)
    }

    pub fn from_gauss(coeffs: Vec<GaussianRational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_real(coeffs: Vec<Rational>) -> Self {
        Self::from_gauss(coeffs.into_iter().map(GaussianRational::from_rational).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_gauss(coeffs.iter().map(|&c| GaussianRational::from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// Coefficients as plain rationals; errors on any imaginary residue.
    pub fn real_coeffs(&self) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.real_part()).collect()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_gauss(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.scale(&GaussianRational::from_rational(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * &GaussianRational::from_i64(k as i64));
        }
        Self::from_gauss(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rational) -> GaussianRational {
        self.eval(&GaussianRational::from_rational(x.clone()))
    }

    /// Evaluation of a real-flagged polynomial at a real point.
    pub fn eval_real(&self, x: &Rational) -> Result<Rational> {
        self.eval_rat(x).real_part()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::rational::to_f64(&c.re);
        }
        acc
    }

    /// Coefficients converted once for repeated float evaluation.
    pub fn f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| crate::rational::to_f64(&c.re)).collect()
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        let dd = d.degree().ok_or_else(|| Error::Domain("division by zero polynomial".into()))?;
        let dlc = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![GaussianRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap().div(&dlc)?;
            let shift = rd - dd;
            quot[shift] = q.clone();
            let sub = d.scale(&q);
            let mut shifted = vec![GaussianRational::zero(); shift];
            shifted.extend_from_slice(&sub.coeffs);
            rem = &rem - &PolyQ::from_gauss(shifted);
        }
        Ok((PolyQ::from_gauss(quot), rem))
    }

    /// Exact division, or None when the remainder is nonzero.
    pub fn try_exact_div(&self, d: &PolyQ) -> Option<PolyQ> {
        match self.div_rem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Monic gcd over the coefficient field.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if let Some(lc) = a.leading() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            a = a.scale(&inv);
        }
        a
    }

    /// p(u/v) * v^deg(p) and the denominator v^deg(p), for a rational
    /// substitution of the variable.
    pub fn compose_ratio(&self, u: &PolyQ, v: &PolyQ) -> (PolyQ, PolyQ) {
        let ell = match self.degree() {
            None => return (PolyQ::zero(), PolyQ::one()),
            Some(d) => d,
        };
        let mut vpows = Vec::with_capacity(ell + 1);
        let mut vp = PolyQ::one();
        for _ in 0..=ell {
            vpows.push(vp.clone());
            vp = &vp * v;
        }
        let mut num = PolyQ::zero();
        let mut upow = PolyQ::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                num = &num + &(&upow * &vpows[ell - k]).scale(c);
            }
            if k < ell {
                upow = &upow * u;
            }
        }
        (num, vpows.pop().unwrap())
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*x^{k}")?;
            }
        }
        Ok(())
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        PolyQ::from_gauss(out)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        PolyQ::from_gauss(out)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyQ::from_gauss(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::from_gauss(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Determinant of a square polynomial matrix by Laplace expansion along the
/// first row. Matrix sizes here are tiny (seed counts), so no fraction-free
/// elimination is needed.
pub fn poly_det(mat: &[Vec<PolyQ>]) -> PolyQ {
    let n = mat.len();
    assert!(mat.iter().all(|r| r.len() == n), "square matrix required");
    match n {
        0 => PolyQ::one(),
        1 => mat[0][0].clone(),
        2 => &(&mat[0][0] * &mat[1][1]) - &(&mat[0][1] * &mat[1][0]),
        _ => {
            let mut acc = PolyQ::zero();
            for j in 0..n {
                if mat[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<PolyQ>> = mat[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &mat[0][j] * &poly_det(&minor);
                if j % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            acc
        }
    }
}

/// Wronskian of a list of polynomials: det of the derivative matrix with
/// rows = derivative order, columns = list entries. W of a single entry is
/// the entry itself; the empty list is a domain error.
pub fn poly_wronskian(fs: &[PolyQ]) -> Result<PolyQ> {
    if fs.is_empty() {
        return Err(Error::Domain("Wronskian of an empty list".into()));
    }
    let n = fs.len();
    let mut rows: Vec<Vec<PolyQ>> = Vec::with_capacity(n);
    let mut current: Vec<PolyQ> = fs.to_vec();
    for _ in 0..n {
        rows.push(current.clone());
        current = current.iter().map(|p| p.derivative()).collect();
    }
    Ok(poly_det(&rows))
}

/// Returns c with p = c*q when the two nonzero polynomials are proportional.
pub fn poly_proportional(p: &PolyQ, q: &PolyQ) -> Option<GaussianRational> {
    let dp = p.degree()?;
    let dq = q.degree()?;
    if dp != dq {
        return None;
    }
    let c = p.leading().unwrap().div(q.leading().unwrap()).ok()?;
    if &q.scale(&c) == p {
        Some(c)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn x() -> PolyQ {
        PolyQ::x()
    }

    #[test]
    fn wronskian_trivial_cases() {
        // [1, x] -> 1
        let w = poly_wronskian(&[PolyQ::one(), x()]).unwrap();
        assert_eq!(w, PolyQ::one());
        // [x, x^2] -> x^2
        let w = poly_wronskian(&[x(), &x() * &x()]).unwrap();
        assert_eq!(w, &x() * &x());
        // empty -> error
        assert!(poly_wronskian(&[]).is_err());
        // single entry -> itself
        let p = PolyQ::from_i64(&[3, 0, 5]);
        assert_eq!(poly_wronskian(&[p.clone()]).unwrap(), p);
    }

    #[test]
    fn proportionality() {
        let p = PolyQ::from_i64(&[2, 2]);
        let q = PolyQ::from_i64(&[1, 1]);
        let c = poly_proportional(&p, &q).unwrap();
        assert_eq!(c, GaussianRational::from_i64(2));
        assert!(poly_proportional(&x(), &q).is_none());
        assert!(poly_proportional(&PolyQ::zero(), &q).is_none());
    }

    #[test]
    fn division_exact_and_not() {
        let p = &PolyQ::from_i64(&[1, 0, 1]).pow(3) * &PolyQ::from_i64(&[-1, 2]);
        let q = PolyQ::from_i64(&[1, 0, 1]);
        let d = p.try_exact_div(&q).unwrap();
        assert_eq!(&d * &q, p);
        assert!(PolyQ::from_i64(&[1, 1]).try_exact_div(&q).is_none());
    }

    #[test]
    fn compose_ratio_matches_eval() {
        // p(u/v)*v^deg at a sample point
        let p = PolyQ::from_i64(&[1, -3, 0, 2]);
        let u = PolyQ::from_i64(&[-1, 0, 1]);
        let v = PolyQ::from_i64(&[0, 2]);
        let (num, den) = p.compose_ratio(&u, &v);
        let t = rat(7, 3);
        let uval = u.eval_rat(&t);
        let vval = v.eval_rat(&t);
        let eta = uval.div(&vval).unwrap();
        let lhs = num.eval_rat(&t);
        let rhs = &p.eval(&eta) * &den.eval_rat(&t);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wronskian_alternating_sign() {
        let f = PolyQ::from_i64(&[1, 2, 3]);
        let g = PolyQ::from_i64(&[0, -1, 0, 4]);
        let h = PolyQ::from_i64(&[5, 0, 1]);
        let w1 = poly_wronskian(&[f.clone(), g.clone(), h.clone()]).unwrap();
        let w2 = poly_wronskian(&[g, f, h]).unwrap();
        assert_eq!(w1, -&w2);
    }
}
