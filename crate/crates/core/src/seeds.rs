//! Seed functions: eigenstates, overshoot eigenfunctions (eigenfunction-
//! shaped solutions with degree beyond n_max, hence negative energy), and
//! the discrete-symmetry twisted states of Kh and hDPT.
//!
//! Each seed is classified as type I / II / III from first principles: the
//! boundary asymptotics are computed from the prefactor exponents and the
//! polynomial's leading/constant terms, then the square-integrability table
//! for the seed and its reciprocal decides the type. The published
//! classification table is a test oracle, not an input.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::families::{
    eigen_energy, eigen_prefactor, nmax, FamilyParams, FamilyTag, Params,
};
use crate::orthopoly::eigen_polynomial;
use crate::poly::PolyQ;
use crate::prefactor::Prefactor;
use crate::rational::{rat, rint, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeedKind {
    Eigen(u32),
    Overshoot(u32),
    TwistedI(u32),
    TwistedII(u32),
    TwistedIII(u32),
}

impl SeedKind {
    pub fn degree(&self) -> u32 {
        match self {
            SeedKind::Eigen(v)
            | SeedKind::Overshoot(v)
            | SeedKind::TwistedI(v)
            | SeedKind::TwistedII(v)
            | SeedKind::TwistedIII(v) => *v,
        }
    }

    pub fn is_twisted(&self) -> bool {
        matches!(
            self,
            SeedKind::TwistedI(_) | SeedKind::TwistedII(_) | SeedKind::TwistedIII(_)
        )
    }

    pub fn label(&self) -> String {
        match self {
            SeedKind::Eigen(v) => format!("eigen({v})"),
            SeedKind::Overshoot(v) => format!("overshoot({v})"),
            SeedKind::TwistedI(v) => format!("twisted1({v})"),
            SeedKind::TwistedII(v) => format!("twisted2({v})"),
            SeedKind::TwistedIII(v) => format!("twisted3({v})"),
        }
    }

    pub fn from_name(kind: &str, v: u32) -> Result<SeedKind> {
        match kind {
            "eigen" => Ok(SeedKind::Eigen(v)),
            "overshoot" => Ok(SeedKind::Overshoot(v)),
            "twisted1" => Ok(SeedKind::TwistedI(v)),
            "twisted2" => Ok(SeedKind::TwistedII(v)),
            "twisted3" | "twisted" => Ok(SeedKind::TwistedIII(v)),
            _ => Err(Error::InvalidSeed(format!(
                "unknown seed kind '{kind}' (expected eigen, overshoot, twisted1, twisted2, twisted3)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedClass {
    Eigen,
    TypeI,
    TypeII,
    TypeIII,
}

impl SeedClass {
    pub fn label(&self) -> &'static str {
        match self {
            SeedClass::Eigen => "eigen",
            SeedClass::TypeI => "I",
            SeedClass::TypeII => "II",
            SeedClass::TypeIII => "III",
        }
    }
}

/// Asymptotic behaviour of a seed toward one end of the x-domain.
#[derive(Clone, Debug, PartialEq)]
pub enum EndBehavior {
    /// phi ~ e^(alpha x) toward an infinite end.
    ExpRate(Rational),
    /// phi ~ x^beta toward a finite end at x = 0.
    PowerOf(Rational),
    /// A double-exponential factor e^(b e^x) dominates (Morse, x -> +inf).
    DoubleExp { decaying: bool },
}

impl EndBehavior {
    fn reciprocal(&self) -> EndBehavior {
        match self {
            EndBehavior::ExpRate(a) => EndBehavior::ExpRate(-a.clone()),
            EndBehavior::PowerOf(b) => EndBehavior::PowerOf(-b.clone()),
            EndBehavior::DoubleExp { decaying } => EndBehavior::DoubleExp { decaying: !decaying },
        }
    }
}

/// Seed and reciprocal descriptors at the two domain ends.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryBehavior {
    pub lower: EndBehavior,
    pub upper: EndBehavior,
}

impl BoundaryBehavior {
    pub fn reciprocal(&self) -> BoundaryBehavior {
        BoundaryBehavior {
            lower: self.lower.reciprocal(),
            upper: self.upper.reciprocal(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Seed {
    pub kind: SeedKind,
    pub params: Params,
    /// Parameters after the discrete-symmetry twist (identical to the
    /// originals for eigen/overshoot kinds); polynomial and prefactor are
    /// built at these values.
    pub effective: FamilyParams,
    pub energy: Rational,
    pub prefactor: Prefactor,
    pub poly: PolyQ,
    pub class: SeedClass,
}

impl Seed {
    pub fn eval_f64(&self, x: f64) -> f64 {
        let eta = self.params.family().eta_f64(x);
        self.prefactor.eval_f64(x) * self.poly.eval_f64(eta)
    }

    pub fn label(&self) -> String {
        format!("{} {}", self.params.describe(), self.kind.label())
    }
}

/// Twisted parameter map for the families that have one.
pub fn twist(fp: &FamilyParams, kind: &SeedKind) -> Result<FamilyParams> {
    match (fp, kind) {
        (_, SeedKind::Eigen(_)) | (_, SeedKind::Overshoot(_)) => Ok(fp.clone()),
        (FamilyParams::KeplerHyp { g, mu }, SeedKind::TwistedIII(_)) => {
            Ok(FamilyParams::KeplerHyp { g: rint(1) - g, mu: mu.clone() })
        }
        (FamilyParams::HypDpt { g, h }, SeedKind::TwistedI(_)) => {
            Ok(FamilyParams::HypDpt { g: g.clone(), h: rint(-1) - h })
        }
        (FamilyParams::HypDpt { g, h }, SeedKind::TwistedII(_)) => {
            Ok(FamilyParams::HypDpt { g: rint(1) - g, h: h.clone() })
        }
        (FamilyParams::HypDpt { g, h }, SeedKind::TwistedIII(_)) => {
            Ok(FamilyParams::HypDpt { g: rint(1) - g, h: rint(-1) - h })
        }
        _ => Err(Error::InvalidSeed(format!(
            "{} has no {} seeds",
            fp.describe(),
            kind.label()
        ))),
    }
}

enum RangeCheck {
    Inside,
    Boundary,
    Outside,
}

impl RangeCheck {
    fn into_result(self, fp: &FamilyParams, kind: &SeedKind, ranges: &str) -> Result<()> {
        match self {
            RangeCheck::Inside => Ok(()),
            RangeCheck::Boundary => Err(Error::NonGeneric(format!(
                "{} {}: v on a range boundary",
                fp.describe(),
                kind.label()
            ))),
            RangeCheck::Outside => Err(Error::InvalidSeed(format!(
                "{} {}: v must lie in {ranges}",
                fp.describe(),
                kind.label()
            ))),
        }
    }
}

/// Membership of v in a union of intervals; the first interval's left end
/// may be closed (twisted indices start at zero).
fn in_interval_union(
    v: &Rational,
    ranges: &[(Rational, Option<Rational>)],
    first_closed: bool,
) -> RangeCheck {
    for (i, (lo, hi)) in ranges.iter().enumerate() {
        let lo_ok = if i == 0 && first_closed { v >= lo } else { v > lo };
        if (v == lo && !(i == 0 && first_closed)) || hi.as_ref().map_or(false, |b| v == b) {
            return RangeCheck::Boundary;
        }
        if lo_ok && hi.as_ref().map_or(true, |b| v < b) {
            return RangeCheck::Inside;
        }
    }
    RangeCheck::Outside
}

/// Checks v against the family's validity range for the kind. Values on a
/// range boundary are rejected as non-generic, values outside as invalid.
fn check_range(p: &Params, kind: &SeedKind) -> Result<()> {
    let v = rint(kind.degree() as i64);
    let fp = p.raw();
    let strictly_between = |lo: &Rational, hi: Option<&Rational>| -> Result<()> {
        if &v == lo || hi.map_or(false, |h| &v == h) {
            return Err(Error::NonGeneric(format!(
                "{} {}: v on a range boundary",
                fp.describe(),
                kind.label()
            )));
        }
        if &v > lo && hi.map_or(true, |h| &v < h) {
            Ok(())
        } else {
            Err(Error::InvalidSeed(format!(
                "{} {}: v outside the validity range",
                fp.describe(),
                kind.label()
            )))
        }
    };
    match (fp, kind) {
        (_, SeedKind::Eigen(n)) => {
            let nm = nmax(fp)?;
            if *n <= nm {
                Ok(())
            } else {
                Err(Error::InvalidSeed(format!(
                    "eigen degree {n} exceeds n_max = {nm} for {}",
                    fp.describe()
                )))
            }
        }
        (
            FamilyParams::Morse { h, .. }
            | FamilyParams::Soliton { h }
            | FamilyParams::HypSymTop { h, .. },
            SeedKind::Overshoot(_),
        ) => strictly_between(&(rint(2) * h), None),
        (FamilyParams::RosenMorse { h, mu }, SeedKind::Overshoot(_)) => {
            let r = mu / h;
            in_interval_union(
                &v,
                &[
                    (h - &r, Some(h.clone())),
                    (h.clone(), Some(h + &r)),
                    (rint(2) * h, None),
                ],
                false,
            )
            .into_result(fp, kind, "(h-mu/h, h), (h, h+mu/h) or (2h, inf)")
        }
        (FamilyParams::KeplerHyp { g, mu }, SeedKind::Overshoot(_)) => {
            strictly_between(&(mu / g - g), None)
        }
        (FamilyParams::KeplerHyp { g, mu }, SeedKind::TwistedIII(_)) => in_interval_union(
            &v,
            &[
                (rint(0), Some(g - rint(1))),
                (g - rint(1), Some(rint(2) * g - rint(1))),
                (mu / g + g - rint(1), None),
            ],
            true,
        )
        .into_result(fp, kind, "[0, g-1), (g-1, 2g-1) or (mu/g+g-1, inf)"),
        (FamilyParams::HypDpt { g, h }, SeedKind::Overshoot(_)) => {
            strictly_between(&(h - g), None)
        }
        (FamilyParams::HypDpt { .. }, SeedKind::TwistedI(_) | SeedKind::TwistedIII(_)) => Ok(()),
        (FamilyParams::HypDpt { g, .. }, SeedKind::TwistedII(_)) => {
            let hi = g - rat(1, 2);
            if v < hi {
                Ok(())
            } else if v == hi {
                Err(Error::NonGeneric(format!(
                    "{} twisted2({}): v on the range boundary",
                    fp.describe(),
                    kind.degree()
                )))
            } else {
                Err(Error::InvalidSeed(format!(
                    "{} twisted2({}): needs 0 <= v < g - 1/2",
                    fp.describe(),
                    kind.degree()
                )))
            }
        }
        _ => Err(Error::InvalidSeed(format!(
            "{} has no {} seeds",
            fp.describe(),
            kind.label()
        ))),
    }
}

/// Exact seed energy.
pub fn seed_energy(p: &Params, kind: &SeedKind) -> Result<Rational> {
    check_range(p, kind)?;
    let fp = p.raw();
    let v = kind.degree() as i64;
    let energy = match (fp, kind) {
        (_, SeedKind::Eigen(_)) | (_, SeedKind::Overshoot(_)) => {
            eigen_energy(fp, &rint(v))?
        }
        (FamilyParams::KeplerHyp { .. }, SeedKind::TwistedIII(_))
        | (FamilyParams::HypDpt { .. }, SeedKind::TwistedIII(_)) => {
            eigen_energy(fp, &rint(-v - 1))?
        }
        (FamilyParams::HypDpt { g, h }, SeedKind::TwistedI(_)) => {
            -((rint(2 * v + 1) + rint(2) * g) * (rint(2 * v + 1) + rint(2) * h))
        }
        (FamilyParams::HypDpt { g, h }, SeedKind::TwistedII(_)) => {
            -((rint(2 * v + 1) - rint(2) * g) * (rint(2 * v + 1) - rint(2) * h))
        }
        _ => unreachable!("ranges already vetted"),
    };
    if !matches!(kind, SeedKind::Eigen(_)) && !energy.is_negative() {
        return Err(Error::NonGeneric(format!(
            "{} {}: energy {energy} is not negative",
            fp.describe(),
            kind.label()
        )));
    }
    Ok(energy)
}

/// Builds the full seed record: twisted parameters, exact energy, prefactor
/// exponents, polynomial part and boundary classification.
pub fn make_seed(p: &Params, kind: &SeedKind) -> Result<Seed> {
    let energy = seed_energy(p, kind)?;
    let effective = twist(p.raw(), kind)?;
    let v = kind.degree();
    let poly = eigen_polynomial(&effective, v)?;
    if poly.is_zero() {
        return Err(Error::NonGeneric(format!(
            "{} {}: polynomial part vanishes identically",
            p.describe(),
            kind.label()
        )));
    }
    if poly.degree() != Some(v as usize) && !p.half_integer_mode() {
        return Err(Error::NonGeneric(format!(
            "{} {}: polynomial degree dropped to {:?}",
            p.describe(),
            kind.label(),
            poly.degree()
        )));
    }
    let prefactor = eigen_prefactor(&effective, v as i64);
    let mut seed = Seed {
        kind: *kind,
        params: p.clone(),
        effective,
        energy,
        prefactor,
        poly,
        class: SeedClass::Eigen,
    };
    seed.class = if matches!(kind, SeedKind::Eigen(_)) {
        SeedClass::Eigen
    } else {
        classify_seed(&seed)?
    };
    Ok(seed)
}

/// Boundary asymptotics of the seed, from the prefactor exponents and the
/// polynomial's behaviour at the eta-image of each end.
pub fn boundary_exponents(seed: &Seed) -> Result<BoundaryBehavior> {
    let fam = seed.params.family();
    let pf = &seed.prefactor;
    let deg = rint(seed.poly.degree().unwrap_or(0) as i64);
    let poly_at = |x: &Rational, end: &str| -> Result<()> {
        let val = seed.poly.eval_rat(x);
        if val.is_zero() {
            Err(Error::Degenerate(format!(
                "{}: polynomial vanishes at the {end} boundary value eta = {x}",
                seed.label()
            )))
        } else {
            Ok(())
        }
    };
    let b = match fam {
        FamilyTag::Morse => {
            poly_at(&rint(0), "upper")?;
            BoundaryBehavior {
                lower: EndBehavior::ExpRate(&pf.exp_x - &deg),
                upper: EndBehavior::DoubleExp { decaying: pf.exp_ex.is_negative() },
            }
        }
        FamilyTag::Soliton | FamilyTag::HypSymTop => {
            let spread = &pf.sinh_pow + &pf.cosh_pow + &deg;
            BoundaryBehavior {
                lower: EndBehavior::ExpRate(&pf.exp_x - &spread),
                upper: EndBehavior::ExpRate(&pf.exp_x + &spread),
            }
        }
        FamilyTag::RosenMorse => {
            poly_at(&rint(-1), "lower")?;
            poly_at(&rint(1), "upper")?;
            let spread = &pf.sinh_pow + &pf.cosh_pow;
            BoundaryBehavior {
                lower: EndBehavior::ExpRate(&pf.exp_x - &spread),
                upper: EndBehavior::ExpRate(&pf.exp_x + &spread),
            }
        }
        FamilyTag::KeplerHyp => {
            poly_at(&rint(1), "upper")?;
            BoundaryBehavior {
                lower: EndBehavior::PowerOf(&pf.sinh_pow - &deg),
                upper: EndBehavior::ExpRate(&pf.exp_x + &pf.sinh_pow + &pf.cosh_pow),
            }
        }
        FamilyTag::HypDpt => {
            poly_at(&rint(1), "lower")?;
            BoundaryBehavior {
                lower: EndBehavior::PowerOf(pf.sinh_pow.clone()),
                upper: EndBehavior::ExpRate(
                    &(&pf.exp_x + &pf.sinh_pow) + &(&pf.cosh_pow + &(rint(2) * &deg)),
                ),
            }
        }
    };
    Ok(b)
}

/// Square integrability of a function with the given end behaviour near
/// that end. Marginal exponents are rejected as degenerate.
fn sq_integrable(end: &EndBehavior, is_lower: bool) -> Result<bool> {
    match end {
        EndBehavior::DoubleExp { decaying } => Ok(*decaying),
        EndBehavior::PowerOf(beta) => {
            // integral of x^(2 beta) near 0 converges iff beta > -1/2
            let m = rat(-1, 2);
            if *beta == m {
                return Err(Error::Degenerate("marginal power exponent -1/2".into()));
            }
            Ok(beta > &m)
        }
        EndBehavior::ExpRate(alpha) => {
            if alpha.is_zero() {
                return Err(Error::Degenerate("marginal exponential rate 0".into()));
            }
            // e^(2 alpha x): integrable toward +inf iff alpha < 0, toward
            // -inf iff alpha > 0
            Ok(if is_lower { alpha.is_positive() } else { alpha.is_negative() })
        }
    }
}

/// Classifies a virtual/pseudo-virtual seed by the integrability pattern of
/// the seed and its reciprocal at the two ends.
pub fn classify_seed(seed: &Seed) -> Result<SeedClass> {
    if matches!(seed.kind, SeedKind::Eigen(_)) {
        return Err(Error::InvalidSeed(
            "classification applies to virtual and pseudo-virtual seeds".into(),
        ));
    }
    let b = boundary_exponents(seed)?;
    let r = b.reciprocal();
    let s_lo = sq_integrable(&b.lower, true)?;
    let s_up = sq_integrable(&b.upper, false)?;
    let r_lo = sq_integrable(&r.lower, true)?;
    let r_up = sq_integrable(&r.upper, false)?;
    if s_lo && s_up {
        return Err(Error::Degenerate(format!(
            "{}: normalizable at both ends, not a virtual state",
            seed.label()
        )));
    }
    if s_lo && !s_up && !r_lo && r_up {
        Ok(SeedClass::TypeI)
    } else if !s_lo && s_up && r_lo && !r_up {
        Ok(SeedClass::TypeII)
    } else if r_lo && r_up {
        Ok(SeedClass::TypeIII)
    } else {
        Err(Error::Degenerate(format!(
            "{}: integrability pattern matches no seed type",
            seed.label()
        )))
    }
}

/// True when the eigen-level seed is square integrable at both ends; sanity
/// check used by tests.
pub fn eigen_is_normalizable(p: &Params, n: u32) -> Result<bool> {
    let seed = make_seed(p, &SeedKind::Eigen(n))?;
    let b = boundary_exponents(&seed)?;
    Ok(sq_integrable(&b.lower, true)? && sq_integrable(&b.upper, false)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn params(fp: FamilyParams) -> Params {
        Params::new(fp, false).unwrap()
    }

    fn morse() -> Params {
        params(FamilyParams::Morse { h: rat(10, 3), mu: rint(1) })
    }

    fn kh() -> Params {
        params(FamilyParams::KeplerHyp { g: rat(5, 3), mu: rint(9) })
    }

    fn hdpt() -> Params {
        params(FamilyParams::HypDpt { g: rat(5, 3), h: rint(10) })
    }

    #[test]
    fn seed_energy_examples() {
        // M(10/3, 1) overshoot(7): 7(20/3 - 7) = -7/3
        assert_eq!(seed_energy(&morse(), &SeedKind::Overshoot(7)).unwrap(), rat(-7, 3));
        // s(7/3) overshoot(5): 5(14/3 - 5) = -5/3
        let s = params(FamilyParams::Soliton { h: rat(7, 3) });
        assert_eq!(seed_energy(&s, &SeedKind::Overshoot(5)).unwrap(), rat(-5, 3));
        // hDPT(5/3, 10) overshoot(9): -4*9*(5/3 - 10 + 9) = -24
        assert_eq!(seed_energy(&hdpt(), &SeedKind::Overshoot(9)).unwrap(), rint(-24));
        // hDPT twisted1(0): -(1 + 10/3)(1 + 20) = -91
        assert_eq!(seed_energy(&hdpt(), &SeedKind::TwistedI(0)).unwrap(), rint(-91));
        // RM(10/3, 4) overshoot(3) equals the eigen-energy continuation
        let rm = params(FamilyParams::RosenMorse { h: rat(10, 3), mu: rint(4) });
        assert_eq!(seed_energy(&rm, &SeedKind::Overshoot(3)).unwrap(), rat(-3289, 25));
    }

    #[test]
    fn kh_twisted_energy_via_symmetry() {
        // E~_v(lambda) = E_v(t(lambda)) + E_{-1}(lambda) = E_{-v-1}(lambda)
        let p = kh();
        for v in [0u32, 1, 2, 7, 8] {
            let kind = SeedKind::TwistedIII(v);
            if check_range(&p, &kind).is_err() {
                continue;
            }
            let direct = seed_energy(&p, &kind).unwrap();
            let twisted = twist(p.raw(), &kind).unwrap();
            let via = eigen_energy(&twisted, &rint(v as i64)).unwrap()
                + eigen_energy(p.raw(), &rint(-1)).unwrap();
            assert_eq!(direct, via, "v = {v}");
        }
        // the worked value: v = 1 lies in (g-1, 2g-1), energy E_{-2}
        assert_eq!(
            seed_energy(&p, &SeedKind::TwistedIII(1)).unwrap(),
            rat(-52288, 75)
        );
    }

    #[test]
    fn classification_examples() {
        let m7 = make_seed(&morse(), &SeedKind::Overshoot(7)).unwrap();
        assert_eq!(m7.class, SeedClass::TypeII);
        let rm = params(FamilyParams::RosenMorse { h: rat(10, 3), mu: rint(4) });
        assert_eq!(make_seed(&rm, &SeedKind::Overshoot(4)).unwrap().class, SeedClass::TypeI);
        let s5 = make_seed(&params(FamilyParams::Soliton { h: rat(7, 3) }), &SeedKind::Overshoot(5))
            .unwrap();
        assert_eq!(s5.class, SeedClass::TypeIII);
        // Kh twisted v=1 sits in the type II window (g-1, 2g-1)
        assert_eq!(make_seed(&kh(), &SeedKind::TwistedIII(1)).unwrap().class, SeedClass::TypeII);
    }

    #[test]
    fn boundary_exponent_examples() {
        // M overshoot(7) toward x -> -inf: e^((h - v) x) with h - v = -11/3
        let m7 = make_seed(&morse(), &SeedKind::Overshoot(7)).unwrap();
        let b = boundary_exponents(&m7).unwrap();
        assert_eq!(b.lower, EndBehavior::ExpRate(rat(-11, 3)));
        assert_eq!(b.upper, EndBehavior::DoubleExp { decaying: true });
        // Kh twisted near x = 0: the sinh power 1-g+v combines with the
        // polynomial's coth^v blow-up to x^(1-g)
        let t1 = make_seed(&kh(), &SeedKind::TwistedIII(1)).unwrap();
        let b = boundary_exponents(&t1).unwrap();
        assert_eq!(b.lower, EndBehavior::PowerOf(rint(1) - rat(5, 3)));
        // hDPT eigenstate behaves as x^g at the origin
        let e0 = make_seed(&hdpt(), &SeedKind::Eigen(0)).unwrap();
        let b = boundary_exponents(&e0).unwrap();
        assert_eq!(b.lower, EndBehavior::PowerOf(rat(5, 3)));
        // reciprocal flips descriptors
        assert_eq!(b.reciprocal().lower, EndBehavior::PowerOf(rat(-5, 3)));
    }

    #[test]
    fn range_violations() {
        // v = 5 < 2h for M(h=10/3) is outside the overshoot range
        assert!(matches!(
            seed_energy(&morse(), &SeedKind::Overshoot(5)),
            Err(Error::InvalidSeed(_))
        ));
        // exact boundary v = 2h is non-generic: h = 7/2 in half-integer mode
        let m = Params::new(FamilyParams::Morse { h: rat(7, 2), mu: rint(1) }, true).unwrap();
        assert!(matches!(
            seed_energy(&m, &SeedKind::Overshoot(7)),
            Err(Error::NonGeneric(_))
        ));
        // twisted kinds only exist for Kh/hDPT
        assert!(seed_energy(&morse(), &SeedKind::TwistedI(0)).is_err());
        // eigen degree beyond n_max
        assert!(seed_energy(&morse(), &SeedKind::Eigen(4)).is_err());
    }

    #[test]
    fn eigen_seeds_normalizable() {
        for (p, nm) in [
            (morse(), 3u32),
            (params(FamilyParams::Soliton { h: rat(7, 3) }), 2),
            (params(FamilyParams::RosenMorse { h: rat(10, 3), mu: rint(4) }), 1),
            (params(FamilyParams::HypSymTop { h: rat(7, 3), mu: rint(1) }), 2),
            (kh(), 1),
            (hdpt(), 4),
        ] {
            for n in 0..=nm {
                assert!(eigen_is_normalizable(&p, n).unwrap(), "{} n={n}", p.describe());
            }
        }
    }

    #[test]
    fn negative_energy_over_sampled_grid() {
        // every valid overshoot seed across a grid of parameters and degrees
        let mut checked = 0;
        for hnum in [7i64, 10, 13, 22, 31] {
            for hden in [2i64, 3, 5] {
                let h = rat(hnum, hden);
                if crate::rational::is_half_integer(&h) {
                    continue;
                }
                for v in 1..=18u32 {
                    let p = Params::new(
                        FamilyParams::Morse { h: h.clone(), mu: rat(3, 2) },
                        false,
                    )
                    .unwrap();
                    if let Ok(e) = seed_energy(&p, &SeedKind::Overshoot(v)) {
                        assert!(e.is_negative());
                        checked += 1;
                    }
                    let p = Params::new(
                        FamilyParams::HypDpt { g: rat(5, 3), h: h.clone() + rint(3) },
                        false,
                    );
                    if let Ok(p) = p {
                        if let Ok(e) = seed_energy(&p, &SeedKind::Overshoot(v)) {
                            assert!(e.is_negative());
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked >= 100, "only {checked} seeds sampled");
    }
}
