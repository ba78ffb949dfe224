//! Exact eigenfunction polynomial parts.
//!
//! Jacobi polynomials are expanded by the finite binomial sum
//!   P_n^{(a,b)}(z) = 2^{-n} sum_s C(n+a, s) C(n+b, n-s) (z-1)^{n-s} (z+1)^s,
//! which stays exact for rational and Gaussian-rational parameters. The
//! soliton and hyperbolic-symmetric-top parts go through an imaginary
//! substitution z -> i*eta with an i^n phase folded in; real-valuedness of
//! the result is asserted, not assumed.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::FamilyParams;
use crate::gaussian::GaussianRational;
use crate::poly::PolyQ;
use crate::rational::{pow_i, rat, rint, Rational};

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k!.
pub fn gen_binom(a: &GaussianRational, k: u32) -> GaussianRational {
    let mut num = GaussianRational::one();
    let mut den = Rational::from_integer(1.into());
    for i in 0..k {
        num = &num * &(a - &GaussianRational::from_i64(i as i64));
        den *= Rational::from_integer((i as i64 + 1).into());
    }
    num.div(&GaussianRational::from_rational(den)).expect("k! is nonzero")
}

/// Rising factorial (a)_k = a(a+1)...(a+k-1).
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for i in 0..k {
        acc *= a + rint(i as i64);
    }
    acc
}

/// Jacobi polynomial of degree n with exact (possibly complex) parameters.
pub fn jacobi(alpha: &GaussianRational, beta: &GaussianRational, n: u32) -> PolyQ {
    let zm = PolyQ::from_i64(&[-1, 1]); // z - 1
    let zp = PolyQ::from_i64(&[1, 1]); // z + 1
    let na = &GaussianRational::from_i64(n as i64) + alpha;
    let nb = &GaussianRational::from_i64(n as i64) + beta;
    let mut acc = PolyQ::zero();
    let mut zp_pow = PolyQ::one();
    let mut zm_pows = Vec::with_capacity(n as usize + 1);
    let mut p = PolyQ::one();
    for _ in 0..=n {
        zm_pows.push(p.clone());
        p = &p * &zm;
    }
    for s in 0..=n {
        let c = &gen_binom(&na, s) * &gen_binom(&nb, n - s);
        if !c.is_zero() {
            acc = &acc + &(&zp_pow * &zm_pows[(n - s) as usize]).scale(&c);
        }
        if s < n {
            zp_pow = &zp_pow * &zp;
        }
    }
    acc.scale_rat(&pow_i(&rint(2), -(n as i64)))
}

/// i^(phase) * p(i z); errors if any imaginary part survives the folding.
pub fn fold_imaginary(p: &PolyQ, phase: u32) -> Result<PolyQ> {
    let folded: Vec<GaussianRational> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| c.mul_i_pow(phase + (j as u32 % 4)))
        .collect();
    let out = PolyQ::from_gauss(folded);
    if !out.is_real() {
        return Err(Error::Internal(
            "imaginary residue after i^n folding".into(),
        ));
    }
    Ok(out)
}

/// Degree-n polynomial part of the eigenfunction, in the family's
/// sinusoidal coordinate, with the family's own normalization.
pub fn eigen_polynomial(fp: &FamilyParams, n: u32) -> Result<PolyQ> {
    match fp {
        FamilyParams::Morse { h, mu } => {
            // (eta/2mu)^n L_n^{(2h-2n)}(2mu/eta), expanded and cleared of 1/eta
            let two_mu = rint(2) * mu;
            if two_mu.is_zero() {
                return Err(Error::Domain("Morse needs mu != 0".into()));
            }
            let a = rint(2) * h - rint(n as i64); // 2h - n
            let mut coeffs = vec![GaussianRational::zero(); n as usize + 1];
            let mut kfact = Rational::from_integer(1.into());
            for k in 0..=n {
                if k > 0 {
                    kfact *= rint(k as i64);
                }
                let binom = gen_binom(&GaussianRational::from_rational(a.clone()), n - k);
                let sign = if k % 2 == 0 { rint(1) } else { rint(-1) };
                let val = &binom
                    * &GaussianRational::from_rational(
                        sign * pow_i(&two_mu, k as i64 - n as i64) / kfact.clone(),
                    );
                coeffs[(n - k) as usize] = val;
            }
            Ok(PolyQ::from_gauss(coeffs))
        }
        FamilyParams::Soliton { h } => {
            // ratio * i^n * P_n^{(-h-1/2,-h-1/2)}(i eta)
            let m1 = (n as i64 - 1).div_euclid(2);
            let m2 = ((n as i64 + 1).div_euclid(2)) as u32;
            let num = pochhammer(&(h - rint(m1)), m2);
            let den = pochhammer(&(h - rint(n as i64) + rat(1, 2)), m2);
            if den.is_zero() {
                return Err(Error::NonGeneric(format!(
                    "soliton polynomial normalization pole at n = {n}, h = {h}"
                )));
            }
            let a = GaussianRational::from_rational(-h.clone() - rat(1, 2));
            let p = jacobi(&a, &a, n);
            let folded = fold_imaginary(&p, n % 4)?;
            Ok(folded.scale_rat(&(num / den)))
        }
        FamilyParams::RosenMorse { h, mu } => {
            let d = h - rint(n as i64);
            if d.is_zero() {
                return Err(Error::Domain(format!("Jacobi parameter pole at n = {n} = h")));
            }
            let alpha = GaussianRational::from_rational(&d + &(mu / &d));
            let beta = GaussianRational::from_rational(&d - &(mu / &d));
            Ok(jacobi(&alpha, &beta, n))
        }
        FamilyParams::HypSymTop { h, mu } => {
            // i^{-n} P_n^{(-h-1/2-imu, -h-1/2+imu)}(i eta)
            let re = -h.clone() - rat(1, 2);
            let alpha = GaussianRational::new(re.clone(), -mu.clone());
            let beta = GaussianRational::new(re, mu.clone());
            let p = jacobi(&alpha, &beta, n);
            fold_imaginary(&p, (4 - n % 4) % 4)
        }
        FamilyParams::KeplerHyp { g, mu } => {
            let s = g + rint(n as i64);
            if s.is_zero() {
                return Err(Error::Domain(format!("Jacobi parameter pole at n = {n} = -g")));
            }
            let alpha = GaussianRational::from_rational(-&s + &(mu / &s));
            let beta = GaussianRational::from_rational(-&s - &(mu / &s));
            Ok(jacobi(&alpha, &beta, n))
        }
        FamilyParams::HypDpt { g, h } => {
            let alpha = GaussianRational::from_rational(g - rat(1, 2));
            let beta = GaussianRational::from_rational(-h.clone() - rat(1, 2));
            Ok(jacobi(&alpha, &beta, n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::to_f64;

    #[test]
    fn jacobi_linear() {
        // P_1^{(a,b)}(z) = ((a+b+2) z + (a-b)) / 2
        let a = GaussianRational::from_rational(rat(1, 3));
        let b = GaussianRational::from_rational(rat(-1, 5));
        let p = jacobi(&a, &b, 1);
        assert_eq!(p.coeff(1).real_part().unwrap(), (rat(1, 3) + rat(-1, 5) + rint(2)) / rint(2));
        assert_eq!(p.coeff(0).real_part().unwrap(), (rat(1, 3) - rat(-1, 5)) / rint(2));
    }

    #[test]
    fn morse_linear_example() {
        // M(h=10/3, mu=1): P_1 = (2h-1)/(2mu) eta - 1
        let fp = FamilyParams::Morse { h: rat(10, 3), mu: rint(1) };
        let p = eigen_polynomial(&fp, 1).unwrap();
        assert_eq!(p.coeff(1).real_part().unwrap(), rat(17, 6));
        assert_eq!(p.coeff(0).real_part().unwrap(), rint(-1));
    }

    #[test]
    fn degree_zero_is_constant() {
        for fp in [
            FamilyParams::Morse { h: rat(10, 3), mu: rint(1) },
            FamilyParams::Soliton { h: rat(7, 3) },
            FamilyParams::RosenMorse { h: rat(10, 3), mu: rint(4) },
            FamilyParams::HypSymTop { h: rat(7, 3), mu: rint(1) },
            FamilyParams::KeplerHyp { g: rat(5, 3), mu: rint(9) },
            FamilyParams::HypDpt { g: rat(5, 3), h: rint(10) },
        ] {
            let p = eigen_polynomial(&fp, 0).unwrap();
            assert_eq!(p.degree(), Some(0), "{}", fp.describe());
        }
    }

    #[test]
    fn degrees_hold_well_past_nmax() {
        for fp in [
            FamilyParams::Morse { h: rat(10, 3), mu: rint(1) },
            FamilyParams::Soliton { h: rat(7, 3) },
            FamilyParams::RosenMorse { h: rat(10, 3), mu: rint(4) },
            FamilyParams::HypSymTop { h: rat(7, 3), mu: rint(1) },
            FamilyParams::KeplerHyp { g: rat(5, 3), mu: rint(9) },
            FamilyParams::HypDpt { g: rat(5, 3), h: rint(10) },
        ] {
            let nm = crate::families::nmax(&fp).unwrap();
            for n in 0..=(nm + 10) {
                let p = eigen_polynomial(&fp, n).unwrap();
                assert_eq!(p.degree(), Some(n as usize), "{} n={n}", fp.describe());
                assert!(p.is_real());
            }
        }
    }

    #[test]
    fn soliton_direct_substitution_oracle() {
        // s(h=7/3), n=2: compare against (cosh x)^2 P_2^{(h-2,h-2)}(tanh x)
        // at 20 rational points t = e^x.
        let h = rat(7, 3);
        let fp = FamilyParams::Soliton { h: h.clone() };
        let p2 = eigen_polynomial(&fp, 2).unwrap();
        // even in eta
        assert!(p2.coeff(1).is_zero());
        assert_eq!(p2.degree(), Some(2));
        let a = GaussianRational::from_rational(&h - &rint(2));
        let jac = jacobi(&a, &a, 2);
        for k in 0..20i64 {
            let t = rat(2 * k + 3, k + 2);
            let cosh = (&t * &t + rint(1)) / (rint(2) * &t);
            let sinh = (&t * &t - rint(1)) / (rint(2) * &t);
            let tanh = &sinh / &cosh;
            let direct = jac.eval_rat(&tanh).real_part().unwrap() * &cosh * &cosh;
            let folded = p2.eval_rat(&sinh).real_part().unwrap();
            assert_eq!(direct, folded);
        }
    }

    #[test]
    fn soliton_parity() {
        let fp = FamilyParams::Soliton { h: rat(7, 3) };
        for n in 0..8u32 {
            let p = eigen_polynomial(&fp, n).unwrap();
            for (j, c) in p.coeffs().iter().enumerate() {
                if (j as u32 % 2) != (n % 2) {
                    assert!(c.is_zero(), "parity violation at n={n}, j={j}");
                }
            }
        }
        // hst at mu = 0 has the same parity structure
        let fp = FamilyParams::HypSymTop { h: rat(7, 3), mu: rint(0) };
        for n in 0..6u32 {
            let p = eigen_polynomial(&fp, n).unwrap();
            for (j, c) in p.coeffs().iter().enumerate() {
                if (j as u32 % 2) != (n % 2) {
                    assert!(c.is_zero(), "hst parity violation at n={n}, j={j}");
                }
            }
        }
    }

    #[test]
    fn hst_float_cross_check() {
        // evaluate the hst polynomial against a float Jacobi recurrence-free
        // direct sum with complex parameters
        let fp = FamilyParams::HypSymTop { h: rat(7, 3), mu: rint(1) };
        let p = eigen_polynomial(&fp, 3).unwrap();
        let eta = 0.4f64;
        let exact = p.eval_f64(eta);
        // direct complex sum
        let n = 3u32;
        let (ar, ai) = (-7.0 / 3.0 - 0.5, -1.0);
        let (br, bi) = (-7.0 / 3.0 - 0.5, 1.0);
        let mut sum = (0.0, 0.0);
        for s in 0..=n {
            let mut term = (1.0, 0.0);
            // C(n+a, s)
            let mut c = (1.0, 0.0);
            for i in 0..s {
                let f = (n as f64 + ar - i as f64, ai);
                c = (c.0 * f.0 - c.1 * f.1, c.0 * f.1 + c.1 * f.0);
                let d = (i + 1) as f64;
                c = (c.0 / d, c.1 / d);
            }
            term = (term.0 * c.0 - term.1 * c.1, term.0 * c.1 + term.1 * c.0);
            let mut c = (1.0, 0.0);
            for i in 0..(n - s) {
                let f = (n as f64 + br - i as f64, bi);
                c = (c.0 * f.0 - c.1 * f.1, c.0 * f.1 + c.1 * f.0);
                let d = (i + 1) as f64;
                c = (c.0 / d, c.1 / d);
            }
            term = (term.0 * c.0 - term.1 * c.1, term.0 * c.1 + term.1 * c.0);
            // (i eta - 1)^(n-s) (i eta + 1)^s
            let mut zm = (1.0, 0.0);
            for _ in 0..(n - s) {
                zm = (zm.0 * -1.0 - zm.1 * eta, zm.0 * eta + zm.1 * -1.0);
            }
            let mut zp = (1.0, 0.0);
            for _ in 0..s {
                zp = (zp.0 * 1.0 - zp.1 * eta, zp.0 * eta + zp.1 * 1.0);
            }
            let ze = (zm.0 * zp.0 - zm.1 * zp.1, zm.0 * zp.1 + zm.1 * zp.0);
            term = (term.0 * ze.0 - term.1 * ze.1, term.0 * ze.1 + term.1 * ze.0);
            sum = (sum.0 + term.0, sum.1 + term.1);
        }
        // times 2^{-n} i^{-n} = 2^{-3} * i
        let scale = 0.125;
        let folded = (-sum.1 * scale, sum.0 * scale);
        assert!(folded.1.abs() < 1e-12);
        assert!(
            (folded.0 - exact).abs() < 1e-12 * exact.abs().max(1.0),
            "{} vs {}",
            folded.0,
            exact
        );
        let _ = to_f64(&rat(1, 1));
    }
}
