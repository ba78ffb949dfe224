//! Log-gamma for real and complex arguments.
//!
//! Real arguments go through statrs; the complex case (needed for norm
//! constants with conjugate gamma pairs) is a Lanczos approximation valid
//! for Re(z) > 0, which is the only region used here.

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("ln_gamma needs a positive argument, got {x}")));
    }
    Ok(statrs::function::gamma::ln_gamma(x))
}

/// Real part of ln Gamma(re + i*im) for re > 0; ln|Gamma(z)|.
pub fn ln_abs_gamma_complex(re: f64, im: f64) -> Result<f64> {
    if !(re > 0.0) {
        return Err(Error::Domain(format!(
            "complex ln_gamma implemented for Re(z) > 0 only, got {re}"
        )));
    }
    // Lanczos with z shifted by one: Gamma(z) = Gamma(z+1)/z
    let zr = re - 1.0;
    let zi = im;
    let mut xr = LANCZOS[0];
    let mut xi = 0.0;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        let dr = zr + i as f64;
        let d2 = dr * dr + zi * zi;
        xr += c * dr / d2;
        xi += -c * zi / d2;
    }
    let tr = zr + LANCZOS_G + 0.5;
    let ti = zi;
    // ln Gamma = 0.5 ln(2 pi) + (z + 0.5) ln t - t + ln x
    let log_t_re = 0.5 * (tr * tr + ti * ti).ln();
    let log_t_im = ti.atan2(tr);
    let a = zr + 0.5;
    let b = zi;
    let re_part = 0.5 * (2.0 * std::f64::consts::PI).ln() + a * log_t_re - b * log_t_im - tr
        + 0.5 * (xr * xr + xi * xi).ln();
    Ok(re_part)
}

/// ln of Gamma(re + i im) * Gamma(re - i im) = ln |Gamma(re + i im)|^2.
pub fn ln_gamma_conj_pair(re: f64, im: f64) -> Result<f64> {
    Ok(2.0 * ln_abs_gamma_complex(re, im)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_axis_agrees_with_statrs() {
        for x in [0.3, 1.0, 2.5, 7.666_666_7, 23.0 / 3.0] {
            let a = ln_gamma(x).unwrap();
            let b = ln_abs_gamma_complex(x, 0.0).unwrap();
            assert!((a - b).abs() < 1e-11, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn conjugate_pair_closed_forms() {
        // |Gamma(1+ib)|^2 = pi b / sinh(pi b)
        let b = 1.0;
        let lhs = ln_gamma_conj_pair(1.0, b).unwrap();
        let rhs = (std::f64::consts::PI * b / (std::f64::consts::PI * b).sinh()).ln();
        assert!((lhs - rhs).abs() < 1e-12);
        // |Gamma(1/2+ib)|^2 = pi / cosh(pi b)
        let b = 0.7;
        let lhs = ln_gamma_conj_pair(0.5, b).unwrap();
        let rhs = (std::f64::consts::PI / (std::f64::consts::PI * b).cosh()).ln();
        assert!((lhs - rhs).abs() < 1e-12);
    }
}
