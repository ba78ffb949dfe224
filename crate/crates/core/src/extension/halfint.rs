//! Half-integer couplings: pseudo-virtual deletions become eigenstate
//! deletions of a parameter-shifted system. At 2h integral the RM seed
//! polynomials drop to degree v - 2h - 1, and the denominator polynomial of
//! a pseudo-virtual set D is proportional to the one built from the dual
//! eigen index set barD at shifted parameters. The soliton analogue holds
//! for half-odd 2h after factoring out (1+eta^2)^((h+1/2) M); no such
//! equivalence exists for integer-h soliton or for hst.


use crate::error::{Error, Result};
use crate::families::FamilyParams;
use crate::gaussian::GaussianRational;
use crate::orthopoly::eigen_polynomial;
use crate::poly::{poly_proportional, poly_wronskian, PolyQ};
use crate::rational::{is_half_integer, is_integer, Rational};
use crate::seeds::SeedKind;

use super::{xi_polynomial, ExtensionSpec};

/// The dual description: eigen index set and shifted parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct KreinAdlerDual {
    /// Complement indices {0..N} minus {N - d'_j}.
    pub indices: Vec<u32>,
    pub n_cap: u32,
    pub reduced_degrees: Vec<u32>,
    pub params: FamilyParams,
}

fn two_h_integer(h: &Rational) -> Option<i64> {
    let two = h + h;
    if two.is_integer() {
        crate::families::bigint_to_i64(&two.to_integer())
    } else {
        None
    }
}

/// Builds the dual index set for a pseudo-virtual seed set at half-integer
/// coupling. N is fixed to max(D) - 1, the smallest admissible cap.
pub fn krein_adler_dual(spec: &ExtensionSpec) -> Result<KreinAdlerDual> {
    if !spec.params().half_integer_mode() {
        return Err(Error::EquivalenceUnavailable(
            "half-integer mode is required for the dual construction".into(),
        ));
    }
    let raw = spec.params().raw();
    let (h, two_h) = match raw {
        FamilyParams::RosenMorse { h, .. } => {
            let t = two_h_integer(h).ok_or_else(|| {
                Error::EquivalenceUnavailable("RM duality needs 2h integral".into())
            })?;
            (h.clone(), t)
        }
        FamilyParams::Soliton { h } => {
            if is_integer(h) {
                return Err(Error::EquivalenceUnavailable(
                    "no equivalence for the soliton potential at integer h".into(),
                ));
            }
            let t = two_h_integer(h).ok_or_else(|| {
                Error::EquivalenceUnavailable("soliton duality needs 2h odd-integral".into())
            })?;
            (h.clone(), t)
        }
        FamilyParams::HypSymTop { .. } => {
            return Err(Error::EquivalenceUnavailable(
                "no degree reduction for the hyperbolic symmetric top".into(),
            ));
        }
        _ => {
            return Err(Error::EquivalenceUnavailable(format!(
                "duality applies to RM and soliton seeds, not {}",
                raw.describe()
            )));
        }
    };
    let _ = h;
    if spec.seed_count() == 0 {
        return Err(Error::Domain("empty seed set has no dual".into()));
    }
    let mut degrees: Vec<i64> = Vec::new();
    for k in spec.kinds() {
        match k {
            SeedKind::Overshoot(v) => degrees.push(*v as i64),
            _ => {
                return Err(Error::EquivalenceUnavailable(
                    "duality applies to overshoot (pseudo-virtual) seeds".into(),
                ))
            }
        }
    }
    if degrees.iter().any(|d| *d <= two_h) {
        return Err(Error::EquivalenceUnavailable(format!(
            "all degrees must exceed 2h = {two_h} for the pseudo-virtual range"
        )));
    }
    let reduced: Vec<u32> = degrees.iter().map(|d| (d - two_h - 1) as u32).collect();
    let n_cap = (*degrees.iter().max().unwrap() - 1) as u32;
    let barred: Vec<u32> = reduced.iter().map(|d| n_cap - d).collect();
    let indices: Vec<u32> = (0..=n_cap).filter(|i| !barred.contains(i)).collect();
    let params = raw.shifted(-(n_cap as i64 + 1));
    Ok(KreinAdlerDual { indices, n_cap, reduced_degrees: reduced, params })
}

/// Denominator polynomial of the dual eigen set at the shifted parameters.
pub fn dual_xi(dual: &KreinAdlerDual) -> Result<PolyQ> {
    match dual.params.family() {
        crate::families::FamilyTag::RosenMorse => {
            super::engine::xbar_det(&dual.params, &dual.indices)
        }
        crate::families::FamilyTag::Soliton => {
            let polys: Vec<PolyQ> = dual
                .indices
                .iter()
                .map(|&n| eigen_polynomial(&dual.params, n))
                .collect::<Result<_>>()?;
            if polys.is_empty() {
                return Ok(PolyQ::one());
            }
            poly_wronskian(&polys) // c_F = 1
        }
        _ => Err(Error::EquivalenceUnavailable("dual side undefined".into())),
    }
}

/// Generic degree of the dual denominator: sum d'_j - M(M-1)/2.
pub fn dual_degree(dual: &KreinAdlerDual) -> usize {
    let m = dual.reduced_degrees.len() as i64;
    let s: i64 = dual.reduced_degrees.iter().map(|&d| d as i64).sum();
    (s - m * (m - 1) / 2).max(0) as usize
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub proportional: bool,
    pub constant: Option<GaussianRational>,
    pub xi_degree: Option<usize>,
    pub dual_degree: usize,
    /// Exponent of the (1+eta^2) factor divided out on the soliton side.
    pub stripped_power: usize,
}

/// Checks the proportionality of the pseudo-virtual denominator polynomial
/// with the dual eigen-set one, including the soliton factorization.
pub fn verify_equivalence(spec: &ExtensionSpec) -> Result<EquivalenceReport> {
    let dual = krein_adler_dual(spec)?;
    let mut xi = xi_polynomial(spec)?;
    let mut stripped = 0usize;
    if let FamilyParams::Soliton { h } = spec.params().raw() {
        // strip (1+eta^2)^((h+1/2) M): integer exponent since 2h is odd
        let e = h + crate::rational::rat(1, 2);
        if !is_half_integer(h) || !e.is_integer() {
            return Err(Error::EquivalenceUnavailable("soliton duality needs 2h odd".into()));
        }
        let per_seed = crate::families::bigint_to_i64(&e.to_integer())
            .ok_or_else(|| Error::Internal("exponent overflow".into()))?;
        let total = per_seed as usize * spec.seed_count();
        let factor = PolyQ::from_i64(&[1, 0, 1]).pow(total);
        xi = xi.try_exact_div(&factor).ok_or_else(|| {
            Error::Internal(format!(
                "soliton denominator lacks the (1+eta^2)^{total} factor"
            ))
        })?;
        stripped = total;
    }
    let bar = dual_xi(&dual)?;
    if bar.is_zero() || xi.is_zero() {
        return Err(Error::Internal("vanishing denominator polynomial".into()));
    }
    let c = poly_proportional(&xi, &bar);
    Ok(EquivalenceReport {
        proportional: c.is_some(),
        constant: c,
        xi_degree: xi.degree(),
        dual_degree: dual_degree(&dual),
        stripped_power: stripped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Params;
    use crate::rational::{rat, rint};

    fn halfint_params(fp: FamilyParams) -> Params {
        Params::new(fp, true).unwrap()
    }

    #[test]
    fn dual_fixture_rm_single() {
        // RM(h=7/2, mu=1), D={8}: d' = 0, N = 7, barD = {0..6},
        // bar-lambda = (23/2, 1)
        let p = halfint_params(FamilyParams::RosenMorse { h: rat(7, 2), mu: rint(1) });
        let spec = ExtensionSpec::new(p, vec![SeedKind::Overshoot(8)]).unwrap();
        let dual = krein_adler_dual(&spec).unwrap();
        assert_eq!(dual.reduced_degrees, vec![0]);
        assert_eq!(dual.n_cap, 7);
        assert_eq!(dual.indices, (0..=6).collect::<Vec<_>>());
        match &dual.params {
            FamilyParams::RosenMorse { h, mu } => {
                assert_eq!(h, &rat(23, 2));
                assert_eq!(mu, &rint(1));
            }
            _ => panic!(),
        }
        assert_eq!(dual_degree(&dual), 0);
    }

    #[test]
    fn dual_fixture_rm_pair() {
        let p = halfint_params(FamilyParams::RosenMorse { h: rat(5, 2), mu: rint(1) });
        let spec =
            ExtensionSpec::new(p, vec![SeedKind::Overshoot(6), SeedKind::Overshoot(7)]).unwrap();
        let dual = krein_adler_dual(&spec).unwrap();
        assert_eq!(dual.reduced_degrees, vec![0, 1]);
    }

    #[test]
    fn hst_has_no_dual() {
        let p = halfint_params(FamilyParams::HypSymTop { h: rat(7, 2), mu: rint(1) });
        let spec = ExtensionSpec::new(p, vec![SeedKind::Overshoot(8)]).unwrap();
        assert!(matches!(
            krein_adler_dual(&spec),
            Err(Error::EquivalenceUnavailable(_))
        ));
    }
}
