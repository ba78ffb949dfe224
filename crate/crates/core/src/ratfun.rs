//! Rational functions of t = e^x with exact rational coefficients.
//!
//! Every hyperbolic/exponential building block of the six families is
//! rational in t, so identities between derived quantities become rational
//! function identities in t. The derivation here is d/dx = t d/dt.
//!
//! No gcd canonicalization is performed; only cheap common factors (powers
//! of t and of t^2+1, t^2-1, t^4+1) are cancelled to keep degrees tame.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct RatFn {
    num: PolyQ,
    den: PolyQ,
}

impl RatFn {
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = Self { num, den };
        f.reduce();
        f
    }

    pub fn from_poly(p: PolyQ) -> Self {
        Self { num: p, den: PolyQ::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(PolyQ::constant_rat(c))
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::from_integer(1.into()))
    }

    /// The identity function t.
    pub fn t() -> Self {
        Self::from_poly(PolyQ::x())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn num_deg(&self) -> usize {
        self.num.degree().unwrap_or(0)
    }

    pub fn den_deg(&self) -> usize {
        self.den.degree().unwrap_or(0)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = PolyQ::one();
            return;
        }
        // strip common powers of t
        let tz_num = self.num.coeffs().iter().take_while(|c| c.is_zero()).count();
        let tz_den = self.den.coeffs().iter().take_while(|c| c.is_zero()).count();
        let k = tz_num.min(tz_den);
        if k > 0 {
            self.num = PolyQ::from_gauss(self.num.coeffs()[k..].to_vec());
            self.den = PolyQ::from_gauss(self.den.coeffs()[k..].to_vec());
        }
        for fac in [
            PolyQ::from_i64(&[1, 0, 1]),
            PolyQ::from_i64(&[-1, 0, 1]),
            PolyQ::from_i64(&[1, 0, 0, 0, 1]),
        ] {
            loop {
                match (self.num.try_exact_div(&fac), self.den.try_exact_div(&fac)) {
                    (Some(n), Some(d)) => {
                        self.num = n;
                        self.den = d;
                    }
                    _ => break,
                }
            }
        }
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        RatFn::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &RatFn) -> Result<RatFn> {
        if o.num.is_zero() {
            return Err(Error::Domain("division by zero rational function".into()));
        }
        Ok(RatFn::new(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> RatFn {
        RatFn::new(self.num.scale_rat(c), self.den.clone())
    }

    pub fn square(&self) -> RatFn {
        self.mul(self)
    }

    pub fn pow_i(&self, k: i64) -> Result<RatFn> {
        let mut acc = RatFn::one();
        let base = if k >= 0 {
            self.clone()
        } else {
            RatFn::one().div(self)?
        };
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// d/dx = t d/dt.
    pub fn ddx(&self) -> RatFn {
        let dn = self.num.derivative();
        let dd = self.den.derivative();
        let t = PolyQ::x();
        let num = &t * &(&(&dn * &self.den) - &(&self.num * &dd));
        RatFn::new(num, &self.den * &self.den)
    }

    /// Exact evaluation; None at a pole of the stored representation.
    pub fn eval_q(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval_real(t).ok()?;
        if d.is_zero() {
            return None;
        }
        let n = self.num.eval_real(t).ok()?;
        Some(n / d)
    }

    /// Float evaluation; uses reversed Horner for large |t| so that huge
    /// intermediate powers cannot overflow before the quotient forms.
    pub fn eval_f64(&self, t: f64) -> f64 {
        if self.num.is_zero() {
            return 0.0;
        }
        if t.abs() <= 1e3 {
            self.num.eval_f64(t) / self.den.eval_f64(t)
        } else {
            let dn = self.num.degree().unwrap_or(0) as i32;
            let dd = self.den.degree().unwrap_or(0) as i32;
            let s = 1.0 / t;
            let rev = |p: &PolyQ| {
                let mut acc = 0.0;
                for c in p.f64_coeffs() {
                    acc = acc * s + c;
                }
                acc
            };
            t.powi(dn - dd) * rev(&self.num) / rev(&self.den)
        }
    }

    /// Degree bound for the cross-multiplied difference with `o`: a valid
    /// sample count for an exact identity proof is this plus one.
    pub fn cross_degree(&self, o: &RatFn) -> usize {
        (self.num_deg() + o.den_deg()).max(o.num_deg() + self.den_deg())
    }
}

/// sinh x = (t^2-1)/(2t)
pub fn sinh_t() -> RatFn {
    RatFn::new(PolyQ::from_i64(&[-1, 0, 1]), PolyQ::from_i64(&[0, 2]))
}

/// cosh x = (t^2+1)/(2t)
pub fn cosh_t() -> RatFn {
    RatFn::new(PolyQ::from_i64(&[1, 0, 1]), PolyQ::from_i64(&[0, 2]))
}

/// tanh x = (t^2-1)/(t^2+1)
pub fn tanh_t() -> RatFn {
    RatFn::new(PolyQ::from_i64(&[-1, 0, 1]), PolyQ::from_i64(&[1, 0, 1]))
}

/// coth x = (t^2+1)/(t^2-1)
pub fn coth_t() -> RatFn {
    RatFn::new(PolyQ::from_i64(&[1, 0, 1]), PolyQ::from_i64(&[-1, 0, 1]))
}

/// sech x = 2t/(t^2+1)
pub fn sech_t() -> RatFn {
    RatFn::new(PolyQ::from_i64(&[0, 2]), PolyQ::from_i64(&[1, 0, 1]))
}

/// Composes a polynomial with a rational map u/v of the variable.
pub fn compose_poly(p: &PolyQ, map: &RatFn) -> RatFn {
    let (num, den) = p.compose_ratio(&map.num, &map.den);
    RatFn::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    #[test]
    fn ddx_of_t_powers() {
        // d/dx t^3 = 3 t^3 under d/dx = t d/dt
        let f = RatFn::from_poly(PolyQ::from_i64(&[0, 0, 0, 1]));
        let d = f.ddx();
        let t = rat(5, 3);
        assert_eq!(d.eval_q(&t).unwrap(), rat(3, 1) * t.clone() * t.clone() * t);
    }

    #[test]
    fn hyperbolic_identity() {
        // cosh^2 - sinh^2 = 1 exactly
        let diff = cosh_t().square().sub(&sinh_t().square());
        for k in 0..5 {
            let t = rat(2 * k + 3, k + 1);
            assert_eq!(diff.eval_q(&t).unwrap(), rint(1));
        }
    }

    #[test]
    fn ddx_tanh_is_sech_squared() {
        let lhs = tanh_t().ddx();
        let rhs = sech_t().square();
        for k in 0..8 {
            let t = rat(2 * k + 3, k + 1);
            assert_eq!(lhs.eval_q(&t), rhs.eval_q(&t));
        }
    }

    #[test]
    fn big_t_float_eval() {
        let f = RatFn::new(PolyQ::from_i64(&[0, 0, 0, 0, 2]), PolyQ::from_i64(&[1, 0, 0, 0, 1]));
        let v = f.eval_f64(1e120);
        assert!((v - 2.0).abs() < 1e-10);
    }
}
