//! Prefactor records: exact exponent bookkeeping for the non-polynomial part
//! of wavefunctions, phi = e^(a x) e^(b e^x) sinh(x)^s cosh(x)^q e^(c arctan sinh x).
//!
//! The log-derivative of any such product is rational in t = e^x, which is
//! what makes every identity in this crate decidable by exact sampling.

use num_traits::Zero;

use crate::ratfun::{cosh_t, coth_t, sech_t, sinh_t, tanh_t, RatFn};
use crate::rational::{is_integer, to_f64, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct Prefactor {
    pub exp_x: Rational,
    pub exp_ex: Rational,
    pub sinh_pow: Rational,
    pub cosh_pow: Rational,
    pub atan_coeff: Rational,
}

impl Prefactor {
    pub fn new() -> Self {
        Self {
            exp_x: Rational::zero(),
            exp_ex: Rational::zero(),
            sinh_pow: Rational::zero(),
            cosh_pow: Rational::zero(),
            atan_coeff: Rational::zero(),
        }
    }

    pub fn with_exp_x(mut self, a: Rational) -> Self {
        self.exp_x = a;
        self
    }

    pub fn with_exp_ex(mut self, b: Rational) -> Self {
        self.exp_ex = b;
        self
    }

    pub fn with_sinh(mut self, s: Rational) -> Self {
        self.sinh_pow = s;
        self
    }

    pub fn with_cosh(mut self, q: Rational) -> Self {
        self.cosh_pow = q;
        self
    }

    pub fn with_atan(mut self, c: Rational) -> Self {
        self.atan_coeff = c;
        self
    }

    pub fn add(&self, o: &Prefactor) -> Prefactor {
        Prefactor {
            exp_x: &self.exp_x + &o.exp_x,
            exp_ex: &self.exp_ex + &o.exp_ex,
            sinh_pow: &self.sinh_pow + &o.sinh_pow,
            cosh_pow: &self.cosh_pow + &o.cosh_pow,
            atan_coeff: &self.atan_coeff + &o.atan_coeff,
        }
    }

    pub fn sub(&self, o: &Prefactor) -> Prefactor {
        Prefactor {
            exp_x: &self.exp_x - &o.exp_x,
            exp_ex: &self.exp_ex - &o.exp_ex,
            sinh_pow: &self.sinh_pow - &o.sinh_pow,
            cosh_pow: &self.cosh_pow - &o.cosh_pow,
            atan_coeff: &self.atan_coeff - &o.atan_coeff,
        }
    }

    pub fn scale_int(&self, k: i64) -> Prefactor {
        let f = Rational::from_integer(k.into());
        Prefactor {
            exp_x: &self.exp_x * &f,
            exp_ex: &self.exp_ex * &f,
            sinh_pow: &self.sinh_pow * &f,
            cosh_pow: &self.cosh_pow * &f,
            atan_coeff: &self.atan_coeff * &f,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exp_x.is_zero()
            && self.exp_ex.is_zero()
            && self.sinh_pow.is_zero()
            && self.cosh_pow.is_zero()
            && self.atan_coeff.is_zero()
    }

    /// d/dx log(prefactor) as an exact rational function of t.
    pub fn logderiv(&self) -> RatFn {
        let mut acc = RatFn::constant(self.exp_x.clone());
        if !self.exp_ex.is_zero() {
            acc = acc.add(&RatFn::t().scale(&self.exp_ex));
        }
        if !self.sinh_pow.is_zero() {
            acc = acc.add(&coth_t().scale(&self.sinh_pow));
        }
        if !self.cosh_pow.is_zero() {
            acc = acc.add(&tanh_t().scale(&self.cosh_pow));
        }
        if !self.atan_coeff.is_zero() {
            acc = acc.add(&sech_t().scale(&self.atan_coeff));
        }
        acc
    }

    /// The prefactor itself as a rational function of t, when all exponents
    /// are integers and no double-exponential or arctan block is present.
    pub fn as_ratfn(&self) -> Option<RatFn> {
        if !self.exp_ex.is_zero() || !self.atan_coeff.is_zero() {
            return None;
        }
        if !(is_integer(&self.exp_x) && is_integer(&self.sinh_pow) && is_integer(&self.cosh_pow)) {
            return None;
        }
        let to_i = |r: &Rational| -> i64 {
            let n = r.to_integer();
            i64::try_from(n).expect("small exponent")
        };
        let mut acc = RatFn::t().pow_i(to_i(&self.exp_x)).ok()?;
        acc = acc.mul(&sinh_t().pow_i(to_i(&self.sinh_pow)).ok()?);
        acc = acc.mul(&cosh_t().pow_i(to_i(&self.cosh_pow)).ok()?);
        Some(acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let a = to_f64(&self.exp_x);
        let b = to_f64(&self.exp_ex);
        let s = to_f64(&self.sinh_pow);
        let q = to_f64(&self.cosh_pow);
        let c = to_f64(&self.atan_coeff);
        let mut logv = a * x + b * x.exp() + c * x.sinh().atan();
        // sinh^s: fractional powers only occur on the half line where sinh > 0
        let sh = x.sinh();
        let mut sign = 1.0;
        if !self.sinh_pow.is_zero() {
            if sh > 0.0 {
                logv += s * sh.ln();
            } else if sh < 0.0 && is_integer(&self.sinh_pow) {
                use num_integer::Integer;
                logv += s * (-sh).ln();
                if self.sinh_pow.to_integer().is_odd() {
                    sign = -sign;
                }
            } else {
                return if s > 0.0 { 0.0 } else { f64::INFINITY };
            }
        }
        if !self.cosh_pow.is_zero() {
            logv += q * x.cosh().ln();
        }
        sign * logv.exp()
    }
}

impl Default for Prefactor {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    #[test]
    fn logderiv_matches_numeric() {
        let p = Prefactor::new()
            .with_exp_x(rat(10, 3))
            .with_exp_ex(rint(-1))
            .with_cosh(rat(-7, 3));
        let ld = p.logderiv();
        let x = 0.37;
        let h = 1e-6;
        let numeric = (p.eval_f64(x + h).ln() - p.eval_f64(x - h).ln()) / (2.0 * h);
        let exact = ld.eval_f64(x.exp());
        assert!((numeric - exact).abs() < 1e-6, "{numeric} vs {exact}");
    }

    #[test]
    fn integer_record_is_rational_in_t() {
        let p = Prefactor::new().with_exp_x(rint(-2)).with_sinh(rint(3)).with_cosh(rint(-1));
        let f = p.as_ratfn().unwrap();
        let x: f64 = 0.83;
        assert!((f.eval_f64(x.exp()) - p.eval_f64(x)).abs() < 1e-12);
        let frac = Prefactor::new().with_sinh(rat(1, 2));
        assert!(frac.as_ratfn().is_none());
    }
}
