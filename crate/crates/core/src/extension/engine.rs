//! Exact Wronskian engines.
//!
//! Every seed here has the shape F(x) * p(eta(x)) where d/dx log F is a
//! polynomial in eta and d(eta)/dx is a polynomial in eta as well. Factoring
//! F out of each column and the accumulated eta-derivative weight out of
//! each row turns the x-Wronskian into a determinant of polynomials in eta:
//!
//!   p_{j,0} = p_j,   p_{j,k+1} = (L_j + k T) p_{j,k} + W p_{j,k}'
//!
//! with per-column L_j and family-wide T, W. The group B families use
//! T = 0, W = 1 - eta^2 (eta = tanh x or coth x); the hDPT twisted seeds
//! use eta = cosh 2x with T = -eta, W = eta^2 - 1 on sinh/cosh exponent
//! pairs.

use num_traits::Zero;

use crate::error::Result;
use crate::families::{forward_shift_coeff, FamilyParams};
use crate::orthopoly::eigen_polynomial;
use crate::poly::{poly_det, PolyQ};
use crate::rational::{rint, Rational};

pub struct EngineColumn {
    /// d/dx log of the column prefactor, as a polynomial in eta.
    pub logderiv: PolyQ,
    pub poly: PolyQ,
}

/// Determinant of the row-reduced derivative matrix.
pub fn derivative_det(cols: &[EngineColumn], step: &PolyQ, wmul: &PolyQ) -> Result<PolyQ> {
    if cols.is_empty() {
        return Ok(PolyQ::one());
    }
    let k = cols.len();
    let mut rows: Vec<Vec<PolyQ>> = Vec::with_capacity(k);
    let mut cur: Vec<PolyQ> = cols.iter().map(|c| c.poly.clone()).collect();
    for r in 0..k {
        rows.push(cur.clone());
        if r + 1 < k {
            cur = cur
                .iter()
                .zip(cols)
                .map(|(p, c)| {
                    let ell = &c.logderiv + &step.scale_rat(&rint(r as i64));
                    &(&ell * p) + &(wmul * &p.derivative())
                })
                .collect();
        }
    }
    Ok(poly_det(&rows))
}

/// Group B reduction: columns carry e^(r x) cosh^a (or sinh^a) prefactors,
/// so L_j = r_j + a_j eta and W = 1 - eta^2.
pub fn group_b_det(cols: Vec<(Rational, Rational, PolyQ)>) -> Result<PolyQ> {
    let columns: Vec<EngineColumn> = cols
        .into_iter()
        .map(|(r, a, p)| EngineColumn {
            logderiv: PolyQ::from_real(vec![r, a]),
            poly: p,
        })
        .collect();
    derivative_det(&columns, &PolyQ::zero(), &PolyQ::from_i64(&[1, 0, -1]))
}

/// hDPT reduction on sinh^a cosh^b prefactors in eta = cosh 2x:
/// L_j = (a (eta+1) + b (eta-1)) / 2, T = -eta, W = eta^2 - 1.
pub fn hdpt_det(cols: Vec<(Rational, Rational, PolyQ)>) -> Result<PolyQ> {
    let half = crate::rational::rat(1, 2);
    let columns: Vec<EngineColumn> = cols
        .into_iter()
        .map(|(a, b, p)| {
            let c0 = (&a - &b) * &half;
            let c1 = (&a + &b) * &half;
            EngineColumn { logderiv: PolyQ::from_real(vec![c0, c1]), poly: p }
        })
        .collect();
    derivative_det(&columns, &PolyQ::from_i64(&[0, -1]), &PolyQ::from_i64(&[-1, 0, 1]))
}

/// The closed-form group B determinant built from forward-shift
/// coefficients: entry (j,k) is
///   prod_{i=0}^{j-2} f_{d_k - i}(lambda + i delta)
///     * P_{d_k - j + 1}(eta; lambda + (j-1) delta),
/// zero when the degree index goes negative.
pub fn xbar_det(fp: &FamilyParams, degrees: &[u32]) -> Result<PolyQ> {
    let m = degrees.len();
    if m == 0 {
        return Ok(PolyQ::one());
    }
    let mut mat = vec![vec![PolyQ::zero(); m]; m];
    for j in 1..=m {
        for (kcol, &d) in degrees.iter().enumerate() {
            let deg = d as i64 - j as i64 + 1;
            if deg < 0 {
                continue;
            }
            let mut fprod = Rational::from_integer(1.into());
            for i in 0..j.saturating_sub(1) as i64 {
                fprod *= forward_shift_coeff(&fp.shifted(i), &rint(d as i64 - i))?;
            }
            if fprod.is_zero() {
                continue;
            }
            let p = eigen_polynomial(&fp.shifted(j as i64 - 1), deg as u32)?;
            mat[j - 1][kcol] = p.scale_rat(&fprod);
        }
    }
    Ok(poly_det(&mat))
}
