//! The six shape-invariant families with finitely many bound states:
//! Morse (M), soliton (s), Rosen-Morse (RM), hyperbolic symmetric top II
//! (hst), Kepler problem in hyperbolic space / Eckart (Kh) and the
//! hyperbolic Darboux-Poschl-Teller potential (hDPT).
//!
//! Everything here is exact: parameters are rationals, the sinusoidal
//! coordinate eta(x) and all potential/prefactor building blocks are
//! rational functions of t = e^x.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gammafn;
use crate::poly::PolyQ;
use crate::prefactor::Prefactor;
use crate::ratfun::{coth_t, sinh_t, tanh_t, RatFn};
use crate::rational::{
    floor_strict, is_half_integer, pow_i, rat, rint, to_f64, Rational,
};
use crate::sturm::OpenInterval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Morse,
    Soliton,
    RosenMorse,
    HypSymTop,
    KeplerHyp,
    HypDpt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    A,
    B,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::Morse,
        FamilyTag::Soliton,
        FamilyTag::RosenMorse,
        FamilyTag::HypSymTop,
        FamilyTag::KeplerHyp,
        FamilyTag::HypDpt,
    ];

    pub fn group(&self) -> Group {
        match self {
            FamilyTag::RosenMorse | FamilyTag::KeplerHyp => Group::B,
            _ => Group::A,
        }
    }

    /// The constant relating d(eta)/dx to a parameter shift of the ground
    /// state; only group A families carry one.
    pub fn cf(&self) -> Option<Rational> {
        match self {
            FamilyTag::Morse => Some(rint(-1)),
            FamilyTag::Soliton | FamilyTag::HypSymTop => Some(rint(1)),
            FamilyTag::HypDpt => Some(rint(4)),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FamilyTag::Morse => "M",
            FamilyTag::Soliton => "s",
            FamilyTag::RosenMorse => "RM",
            FamilyTag::HypSymTop => "hst",
            FamilyTag::KeplerHyp => "Kh",
            FamilyTag::HypDpt => "hDPT",
        }
    }

    pub fn parse(s: &str) -> Result<FamilyTag> {
        match s {
            "M" => Ok(FamilyTag::Morse),
            "s" => Ok(FamilyTag::Soliton),
            "RM" => Ok(FamilyTag::RosenMorse),
            "hst" => Ok(FamilyTag::HypSymTop),
            "Kh" => Ok(FamilyTag::KeplerHyp),
            "hDPT" => Ok(FamilyTag::HypDpt),
            _ => Err(Error::InvalidParams(format!(
                "unknown family tag '{s}' (expected M, s, RM, hst, Kh, hDPT)"
            ))),
        }
    }

    /// True for the half-line families (x > 0).
    pub fn half_line(&self) -> bool {
        matches!(self, FamilyTag::KeplerHyp | FamilyTag::HypDpt)
    }

    /// Sinusoidal coordinate eta as a rational function of t = e^x.
    pub fn eta(&self) -> RatFn {
        match self {
            FamilyTag::Morse => RatFn::new(PolyQ::one(), PolyQ::x()),
            FamilyTag::Soliton | FamilyTag::HypSymTop => sinh_t(),
            FamilyTag::RosenMorse => tanh_t(),
            FamilyTag::KeplerHyp => coth_t(),
            FamilyTag::HypDpt => {
                // cosh 2x = (t^4 + 1) / (2 t^2)
                RatFn::new(PolyQ::from_i64(&[1, 0, 0, 0, 1]), PolyQ::from_i64(&[0, 0, 2]))
            }
        }
    }

    pub fn eta_f64(&self, x: f64) -> f64 {
        match self {
            FamilyTag::Morse => (-x).exp(),
            FamilyTag::Soliton | FamilyTag::HypSymTop => x.sinh(),
            FamilyTag::RosenMorse => x.tanh(),
            FamilyTag::KeplerHyp => 1.0 / x.tanh(),
            FamilyTag::HypDpt => (2.0 * x).cosh(),
        }
    }

    /// The image of the x-domain under eta; the interval on which the
    /// denominator polynomial must be nodeless.
    pub fn eta_interval(&self) -> OpenInterval {
        match self {
            FamilyTag::Morse => OpenInterval::above(rint(0)),
            FamilyTag::Soliton | FamilyTag::HypSymTop => OpenInterval::full(),
            FamilyTag::RosenMorse => OpenInterval::bounded(rint(-1), rint(1)).unwrap(),
            FamilyTag::KeplerHyp | FamilyTag::HypDpt => OpenInterval::above(rint(1)),
        }
    }
}

/// Raw parameter record; operations on it are purely algebraic and do not
/// enforce the physical domain, so shifted and twisted values are fine.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyParams {
    Morse { h: Rational, mu: Rational },
    Soliton { h: Rational },
    RosenMorse { h: Rational, mu: Rational },
    HypSymTop { h: Rational, mu: Rational },
    KeplerHyp { g: Rational, mu: Rational },
    HypDpt { g: Rational, h: Rational },
}

impl FamilyParams {
    pub fn family(&self) -> FamilyTag {
        match self {
            FamilyParams::Morse { .. } => FamilyTag::Morse,
            FamilyParams::Soliton { .. } => FamilyTag::Soliton,
            FamilyParams::RosenMorse { .. } => FamilyTag::RosenMorse,
            FamilyParams::HypSymTop { .. } => FamilyTag::HypSymTop,
            FamilyParams::KeplerHyp { .. } => FamilyTag::KeplerHyp,
            FamilyParams::HypDpt { .. } => FamilyTag::HypDpt,
        }
    }

    /// lambda + k*delta with the family's shift vector delta.
    pub fn shifted(&self, k: i64) -> FamilyParams {
        let kq = rint(k);
        match self {
            FamilyParams::Morse { h, mu } => {
                FamilyParams::Morse { h: h - &kq, mu: mu.clone() }
            }
            FamilyParams::Soliton { h } => FamilyParams::Soliton { h: h - &kq },
            FamilyParams::RosenMorse { h, mu } => {
                FamilyParams::RosenMorse { h: h - &kq, mu: mu.clone() }
            }
            FamilyParams::HypSymTop { h, mu } => {
                FamilyParams::HypSymTop { h: h - &kq, mu: mu.clone() }
            }
            FamilyParams::KeplerHyp { g, mu } => {
                FamilyParams::KeplerHyp { g: g + &kq, mu: mu.clone() }
            }
            FamilyParams::HypDpt { g, h } => {
                FamilyParams::HypDpt { g: g + &kq, h: h - &kq }
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FamilyParams::Morse { h, mu } => format!("M(h={h}, mu={mu})"),
            FamilyParams::Soliton { h } => format!("s(h={h})"),
            FamilyParams::RosenMorse { h, mu } => format!("RM(h={h}, mu={mu})"),
            FamilyParams::HypSymTop { h, mu } => format!("hst(h={h}, mu={mu})"),
            FamilyParams::KeplerHyp { g, mu } => format!("Kh(g={g}, mu={mu})"),
            FamilyParams::HypDpt { g, h } => format!("hDPT(g={g}, h={h})"),
        }
    }
}

/// Validated parameters: domain constraints plus the genericity rules, with
/// an explicit opt-in flag for half-integer couplings.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    values: FamilyParams,
    half_integer_mode: bool,
}

impl Params {
    pub fn new(values: FamilyParams, half_integer_mode: bool) -> Result<Self> {
        let fail = |m: String| Err(Error::InvalidParams(m));
        let positive = |x: &Rational| x.is_positive();
        match &values {
            FamilyParams::Morse { h, mu } | FamilyParams::HypSymTop { h, mu } => {
                if !positive(h) || !positive(mu) {
                    return fail(format!("{} requires h > 0 and mu > 0", values.describe()));
                }
                if is_half_integer(h) && !half_integer_mode {
                    return fail(format!("{}: 2h integral needs half-integer mode", values.describe()));
                }
            }
            FamilyParams::Soliton { h } => {
                if !positive(h) {
                    return fail(format!("{} requires h > 0", values.describe()));
                }
                if is_half_integer(h) && !half_integer_mode {
                    return fail(format!("{}: 2h integral needs half-integer mode", values.describe()));
                }
            }
            FamilyParams::RosenMorse { h, mu } => {
                if !positive(mu) || !positive(h) || h * h <= mu.clone() {
                    return fail(format!("{} requires h > sqrt(mu) > 0", values.describe()));
                }
                if is_half_integer(h) && !half_integer_mode {
                    return fail(format!("{}: 2h integral needs half-integer mode", values.describe()));
                }
            }
            FamilyParams::KeplerHyp { g, mu } => {
                if !positive(mu) || g <= &rat(1, 2) || g * g >= mu.clone() {
                    return fail(format!("{} requires sqrt(mu) > g > 1/2", values.describe()));
                }
                if is_half_integer(g) && !half_integer_mode {
                    return fail(format!("{}: 2g integral needs half-integer mode", values.describe()));
                }
            }
            FamilyParams::HypDpt { g, h } => {
                if g <= &rat(1, 2) || h <= g {
                    return fail(format!("{} requires h > g > 1/2", values.describe()));
                }
                if !half_integer_mode
                    && (is_half_integer(g)
                        || is_half_integer(&(h - g))
                        || is_half_integer(&(h + g)))
                {
                    return fail(format!(
                        "{}: 2g, 2(h-g), 2(h+g) must all be non-integral at generic couplings",
                        values.describe()
                    ));
                }
            }
        }
        Ok(Self { values, half_integer_mode })
    }

    pub fn raw(&self) -> &FamilyParams {
        &self.values
    }

    pub fn family(&self) -> FamilyTag {
        self.values.family()
    }

    pub fn half_integer_mode(&self) -> bool {
        self.half_integer_mode
    }

    pub fn shifted(&self, k: i64) -> FamilyParams {
        self.values.shifted(k)
    }

    pub fn describe(&self) -> String {
        self.values.describe()
    }
}

/// Largest degree of a normalizable eigenstate. Square roots are decided by
/// exact squared comparisons, never by floats.
pub fn nmax(fp: &FamilyParams) -> Result<u32> {
    let strict = |a: &Rational| -> Result<u32> {
        let f = floor_strict(a);
        if f.is_negative() {
            return Err(Error::InvalidParams(format!(
                "{}: no normalizable level (n_max would be {f})",
                fp.describe()
            )));
        }
        Ok(f.to_u32().ok_or_else(|| Error::InvalidParams("n_max out of range".into()))?)
    };
    match fp {
        FamilyParams::Morse { h, .. }
        | FamilyParams::Soliton { h }
        | FamilyParams::HypSymTop { h, .. } => strict(h),
        FamilyParams::HypDpt { g, h } => strict(&((h - g) / rint(2))),
        FamilyParams::RosenMorse { h, mu } => {
            // greatest n >= 0 with h - n > sqrt(mu), i.e. (h-n)^2 > mu
            let mut n: u32 = 0;
            loop {
                let next = rint(i64::from(n) + 1);
                let hm = h - &next;
                if hm.is_positive() && &hm * &hm > *mu {
                    n += 1;
                } else {
                    return Ok(n);
                }
                if n > 1_000_000 {
                    return Err(Error::InvalidParams("n_max search diverged".into()));
                }
            }
        }
        FamilyParams::KeplerHyp { g, mu } => {
            // greatest n >= 0 with g + n < sqrt(mu), i.e. (g+n)^2 < mu
            let mut n: u32 = 0;
            loop {
                let next = rint(i64::from(n) + 1);
                let gp = g + &next;
                if &gp * &gp < *mu {
                    n += 1;
                } else {
                    return Ok(n);
                }
                if n > 1_000_000 {
                    return Err(Error::InvalidParams("n_max search diverged".into()));
                }
            }
        }
    }
}

/// Closed-form eigenvalue at (possibly non-integer) degree n; used both for
/// the discrete spectrum and for the continuous energy curves.
pub fn eigen_energy(fp: &FamilyParams, n: &Rational) -> Result<Rational> {
    match fp {
        FamilyParams::Morse { h, .. }
        | FamilyParams::Soliton { h }
        | FamilyParams::HypSymTop { h, .. } => {
            let d = h - n;
            Ok(h * h - &d * &d)
        }
        FamilyParams::RosenMorse { h, mu } => {
            let d = h - n;
            if d.is_zero() || h.is_zero() {
                return Err(Error::Domain(format!(
                    "energy pole at n = {n} for {}",
                    fp.describe()
                )));
            }
            Ok(h * h - &d * &d + mu * mu / (h * h) - mu * mu / (&d * &d))
        }
        FamilyParams::KeplerHyp { g, mu } => {
            let s = g + n;
            if s.is_zero() || g.is_zero() {
                return Err(Error::Domain(format!(
                    "energy pole at n = {n} for {}",
                    fp.describe()
                )));
            }
            Ok(g * g - &s * &s + mu * mu / (g * g) - mu * mu / (&s * &s))
        }
        FamilyParams::HypDpt { g, h } => Ok(rint(4) * n * (h - g - n)),
    }
}

/// The potential as an exact rational function of t = e^x.
pub fn potential_ratfn(fp: &FamilyParams) -> RatFn {
    let sech2 = || {
        // 4 t^2 / (t^2+1)^2
        RatFn::new(
            PolyQ::from_i64(&[0, 0, 4]),
            &PolyQ::from_i64(&[1, 0, 1]) * &PolyQ::from_i64(&[1, 0, 1]),
        )
    };
    let csch2 = || {
        RatFn::new(
            PolyQ::from_i64(&[0, 0, 4]),
            &PolyQ::from_i64(&[-1, 0, 1]) * &PolyQ::from_i64(&[-1, 0, 1]),
        )
    };
    match fp {
        FamilyParams::Morse { h, mu } => {
            // mu^2 e^{2x} - mu(2h+1) e^x + h^2
            let c2 = mu * mu;
            let c1 = -(mu * (rint(2) * h + rint(1)));
            let c0 = h * h;
            RatFn::from_poly(PolyQ::from_real(vec![c0, c1, c2]))
        }
        FamilyParams::Soliton { h } => {
            let well = sech2().scale(&-(h * (h + rint(1))));
            well.add(&RatFn::constant(h * h))
        }
        FamilyParams::RosenMorse { h, mu } => {
            let well = sech2().scale(&-(h * (h + rint(1))));
            let slope = tanh_t().scale(&(rint(2) * mu));
            let c = h * h + mu * mu / (h * h);
            well.add(&slope).add(&RatFn::constant(c))
        }
        FamilyParams::HypSymTop { h, mu } => {
            let num = RatFn::constant(-(h * (h + rint(1))) + mu * mu)
                .add(&sinh_t().scale(&(mu * (rint(2) * h + rint(1)))));
            num.mul(&sech2()).add(&RatFn::constant(h * h))
        }
        FamilyParams::KeplerHyp { g, mu } => {
            let wall = csch2().scale(&(g * (g - rint(1))));
            let slope = coth_t().scale(&(rint(-2) * mu));
            let c = g * g + mu * mu / (g * g);
            wall.add(&slope).add(&RatFn::constant(c))
        }
        FamilyParams::HypDpt { g, h } => {
            let wall = csch2().scale(&(g * (g - rint(1))));
            let well = sech2().scale(&-(h * (h + rint(1))));
            let d = h - g;
            wall.add(&well).add(&RatFn::constant(&d * &d))
        }
    }
}

/// Exact potential value at rational t = e^x inside the x-domain.
pub fn potential_value(fp: &FamilyParams, t: &Rational) -> Result<Rational> {
    check_domain_t(fp.family(), t)?;
    potential_ratfn(fp)
        .eval_q(t)
        .ok_or_else(|| Error::Domain(format!("potential pole at t = {t}")))
}

pub fn check_domain_t(tag: FamilyTag, t: &Rational) -> Result<()> {
    if !t.is_positive() {
        return Err(Error::Domain(format!("t = e^x must be positive, got {t}")));
    }
    if tag.half_line() && t <= &rint(1) {
        return Err(Error::Domain(format!(
            "family {} lives on x > 0, so t must exceed 1, got {t}",
            tag.label()
        )));
    }
    Ok(())
}

/// Limits of U at the domain ends that support a continuum; the smallest is
/// the bound-state threshold used by the finite-difference solver.
pub fn threshold_limits(fp: &FamilyParams) -> Vec<Rational> {
    match fp {
        FamilyParams::Morse { h, .. }
        | FamilyParams::Soliton { h }
        | FamilyParams::HypSymTop { h, .. } => vec![h * h],
        FamilyParams::RosenMorse { h, mu } => {
            let lo = h - mu / h;
            let hi = h + mu / h;
            vec![&lo * &lo, &hi * &hi]
        }
        FamilyParams::KeplerHyp { g, mu } => {
            let d = mu / g - g;
            vec![&d * &d]
        }
        FamilyParams::HypDpt { g, h } => {
            let d = h - g;
            vec![&d * &d]
        }
    }
}

pub fn threshold(fp: &FamilyParams) -> Rational {
    threshold_limits(fp).into_iter().min().expect("nonempty")
}

/// Ground-state prefactor record of the family at the given raw parameters.
pub fn phi0_prefactor(fp: &FamilyParams) -> Prefactor {
    match fp {
        FamilyParams::Morse { h, mu } => {
            Prefactor::new().with_exp_x(h.clone()).with_exp_ex(-mu.clone())
        }
        FamilyParams::Soliton { h } => Prefactor::new().with_cosh(-h.clone()),
        FamilyParams::RosenMorse { h, mu } => {
            Prefactor::new().with_exp_x(-(mu / h)).with_cosh(-h.clone())
        }
        FamilyParams::HypSymTop { h, mu } => {
            Prefactor::new().with_atan(-mu.clone()).with_cosh(-h.clone())
        }
        FamilyParams::KeplerHyp { g, mu } => {
            Prefactor::new().with_exp_x(-(mu / g)).with_sinh(g.clone())
        }
        FamilyParams::HypDpt { g, h } => {
            Prefactor::new().with_sinh(g.clone()).with_cosh(-h.clone())
        }
    }
}

/// Prefactor of the degree-n eigenfunction: group A keeps the ground-state
/// factor, group B shifts the parameters with n.
pub fn eigen_prefactor(fp: &FamilyParams, n: i64) -> Prefactor {
    match fp.family().group() {
        Group::A => phi0_prefactor(fp),
        Group::B => phi0_prefactor(&fp.shifted(n)),
    }
}

/// Exact d/dx log phi_0(x; lambda + shift*delta) at rational t.
pub fn phi0_logderiv(fp: &FamilyParams, shift: i64, t: &Rational) -> Result<Rational> {
    check_domain_t(fp.family(), t)?;
    phi0_prefactor(&fp.shifted(shift))
        .logderiv()
        .eval_q(t)
        .ok_or_else(|| Error::Domain(format!("log-derivative pole at t = {t}")))
}

/// Forward-shift coefficient f_n; enters the group B determinant entries.
pub fn forward_shift_coeff(fp: &FamilyParams, n: &Rational) -> Result<Rational> {
    match fp {
        FamilyParams::Morse { h, mu } => Ok((n - rint(2) * h) / (rint(2) * mu)),
        FamilyParams::Soliton { h } => Ok(h.clone()),
        FamilyParams::RosenMorse { h, mu } => {
            let d = h - n;
            if h.is_zero() || d.is_zero() {
                return Err(Error::Domain("forward-shift pole".into()));
            }
            Ok((h * h * (&d * &d) - mu * mu) / (h * (&d * &d)))
        }
        FamilyParams::HypSymTop { h, .. } => Ok((n - rint(2) * h) / rint(2)),
        FamilyParams::KeplerHyp { g, mu } => {
            let s = g + n;
            if g.is_zero() || s.is_zero() {
                return Err(Error::Domain("forward-shift pole".into()));
            }
            Ok((mu * mu - g * g * (&s * &s)) / (g * (&s * &s)))
        }
        FamilyParams::HypDpt { g, h } => Ok(rint(2) * (n + g - h)),
    }
}

/// Backward-shift coefficient b_{n-1}; stored for completeness, unused by
/// the Wronskian machinery.
pub fn backward_shift_coeff(fp: &FamilyParams, n: &Rational) -> Result<Rational> {
    match fp {
        FamilyParams::Morse { mu, .. } => Ok(rint(-2) * n * mu),
        FamilyParams::Soliton { h } | FamilyParams::RosenMorse { h, .. } => {
            if h.is_zero() {
                return Err(Error::Domain("backward-shift pole".into()));
            }
            Ok(n * (rint(2) * h - n) / h)
        }
        FamilyParams::HypSymTop { .. } | FamilyParams::HypDpt { .. } => Ok(rint(-2) * n),
        FamilyParams::KeplerHyp { g, .. } => {
            if g.is_zero() {
                return Err(Error::Domain("backward-shift pole".into()));
            }
            Ok(n * (rint(2) * g + n) / g)
        }
    }
}

/// Norm constant h_n of the n-th eigenstate, via log-gamma.
pub fn norm_constant(fp: &FamilyParams, n: u32) -> Result<f64> {
    let nm = nmax(fp)?;
    if n > nm {
        return Err(Error::Domain(format!(
            "norm constant defined for n <= n_max = {nm}, got {n}"
        )));
    }
    let nf = n as f64;
    let ln_fact = gammafn::ln_gamma(nf + 1.0)?;
    let ln2 = std::f64::consts::LN_2;
    match fp {
        FamilyParams::Morse { h, mu } => {
            let h = to_f64(h);
            let mu = to_f64(mu);
            let ln = gammafn::ln_gamma(2.0 * h - nf + 1.0)?
                - 2.0 * h * (2.0 * mu).ln()
                - ln_fact
                - (2.0 * (h - nf)).ln();
            Ok(ln.exp())
        }
        FamilyParams::Soliton { h } => {
            let h = to_f64(h);
            let ln = (2.0 * h - 2.0 * nf) * ln2 + 2.0 * gammafn::ln_gamma(h + 1.0)?
                - ln_fact
                - (h - nf).ln()
                - gammafn::ln_gamma(2.0 * h - nf + 1.0)?;
            Ok(ln.exp())
        }
        FamilyParams::RosenMorse { h, mu } => {
            let hq = h.clone();
            let d = &hq - &rint(n as i64);
            let r = mu / &d; // mu/(h-n)
            let hf = to_f64(h);
            let df = to_f64(&d);
            let rf = to_f64(&r);
            let ln = (2.0 * hf - 2.0 * nf) * ln2 + df.ln()
                + gammafn::ln_gamma(hf + rf + 1.0)?
                + gammafn::ln_gamma(hf - rf + 1.0)?
                - ln_fact
                - (df * df - rf * rf).ln()
                - gammafn::ln_gamma(2.0 * hf - nf + 1.0)?;
            Ok(ln.exp())
        }
        FamilyParams::HypSymTop { h, mu } => {
            let h = to_f64(h);
            let mu = to_f64(mu);
            let ln = std::f64::consts::PI.ln() + gammafn::ln_gamma(2.0 * h - nf + 1.0)?
                - 2.0 * h * ln2
                - ln_fact
                - (h - nf).ln()
                - gammafn::ln_gamma_conj_pair(h - nf + 0.5, mu)?;
            Ok(ln.exp())
        }
        FamilyParams::KeplerHyp { g, mu } => {
            let gq = g.clone();
            let s = &gq + &rint(n as i64);
            let r = mu / &s; // mu/(g+n)
            let gf = to_f64(g);
            let sf = to_f64(&s);
            let rf = to_f64(&r);
            let ln = sf.ln() + gammafn::ln_gamma(1.0 - gf + rf)?
                + gammafn::ln_gamma(2.0 * gf + nf)?
                - (2.0 * gf + 2.0 * nf) * ln2
                - ln_fact
                - (rf * rf - sf * sf).ln()
                - gammafn::ln_gamma(gf + rf)?;
            Ok(ln.exp())
        }
        FamilyParams::HypDpt { g, h } => {
            let g = to_f64(g);
            let h = to_f64(h);
            let ln = gammafn::ln_gamma(nf + g + 0.5)? + gammafn::ln_gamma(h - g - nf + 1.0)?
                - ln2
                - ln_fact
                - (h - g - 2.0 * nf).ln()
                - gammafn::ln_gamma(h - nf + 0.5)?;
            Ok(ln.exp())
        }
    }
}

/// One sampled point of the energy curve.
#[derive(Clone, Debug)]
pub struct CurvePoint {
    pub n: Rational,
    pub energy: Option<Rational>,
    pub region: Option<String>,
    pub discrete: bool,
}

/// A labelled degree range carrying seeds of one character.
#[derive(Clone, Debug)]
pub struct Region {
    pub label: String,
    /// "n" for ranges on the eigen-degree axis, "v" for twisted-seed indices.
    pub axis: &'static str,
    pub lo: Rational,
    pub hi: Option<Rational>,
    pub first_integers: Vec<i64>,
}

fn integers_in(lo: &Rational, lo_closed: bool, hi: &Option<Rational>, max_count: usize) -> Vec<i64> {
    let mut k = if lo.is_integer() {
        let v = lo.to_integer().to_i64().unwrap_or(0);
        if lo_closed {
            v
        } else {
            v + 1
        }
    } else {
        lo.ceil().to_integer().to_i64().unwrap_or(0)
    };
    if k < 0 {
        k = 0;
    }
    let mut out = Vec::new();
    while out.len() < max_count {
        let kq = rint(k);
        if let Some(h) = hi {
            if &kq >= h {
                break;
            }
        }
        out.push(k);
        k += 1;
    }
    out
}

/// Seed-range regions of the family: "a" for the discrete spectrum, "b"
/// ranges for overshoot seeds, "c" ranges for twisted pseudo seeds.
pub fn regions(p: &Params) -> Result<Vec<Region>> {
    let fp = p.raw();
    let nm = nmax(fp)? as i64;
    let mut out = vec![Region {
        label: "a".into(),
        axis: "n",
        lo: rint(0),
        hi: Some(rint(nm) + rat(1, 2)),
        first_integers: (0..=nm.min(9)).collect(),
    }];
    let push = |out: &mut Vec<Region>, label: &str, axis: &'static str, lo: Rational, hi: Option<Rational>| {
        // twisted-seed ranges ("v" axis) include their left endpoint
        let ints = integers_in(&lo, axis == "v", &hi, 3);
        out.push(Region { label: label.into(), axis, lo, hi, first_integers: ints });
    };
    match fp {
        FamilyParams::Morse { h, .. } => {
            push(&mut out, "b", "n", rint(2) * h, None);
            push(&mut out, "c", "v", rint(0), None);
        }
        FamilyParams::Soliton { h } => {
            push(&mut out, "b", "n", rint(2) * h, None);
            push(&mut out, "c", "v", rint(0), None);
        }
        FamilyParams::HypSymTop { h, .. } => {
            push(&mut out, "b", "n", rint(2) * h, None);
            push(&mut out, "c", "v", rint(0), None);
        }
        FamilyParams::RosenMorse { h, mu } => {
            let r = mu / h;
            push(&mut out, "b1", "n", h - &r, Some(h.clone()));
            push(&mut out, "b2", "n", h.clone(), Some(h + &r));
            push(&mut out, "b3", "n", rint(2) * h, None);
            push(&mut out, "c", "v", rint(0), None);
        }
        FamilyParams::KeplerHyp { g, mu } => {
            push(&mut out, "b", "n", mu / g - g, None);
            // twisted pseudo ranges: near the origin and beyond mu/g + g - 1
            push(&mut out, "c1", "v", rint(0), Some(g - rint(1)));
            push(&mut out, "c", "v", mu / g + g - rint(1), None);
        }
        FamilyParams::HypDpt { g, h } => {
            push(&mut out, "b", "n", h - g, None);
            push(&mut out, "c", "v", rint(0), None);
        }
    }
    Ok(out)
}

/// Samples the closed-form energy curve over [from, to] with the given step;
/// pole samples are skipped (energy None).
pub fn energy_curve(
    p: &Params,
    from: &Rational,
    to: &Rational,
    step: &Rational,
) -> Result<Vec<CurvePoint>> {
    if !step.is_positive() {
        return Err(Error::Domain("curve step must be positive".into()));
    }
    let fp = p.raw();
    let nm = rint(nmax(fp)? as i64);
    let regs = regions(p)?;
    let mut out = Vec::new();
    let mut n = from.clone();
    while &n <= to {
        let energy = eigen_energy(fp, &n).ok();
        let discrete = n.is_integer() && !n.is_negative() && n <= nm;
        let region = regs
            .iter()
            .filter(|r| r.axis == "n")
            .find(|r| {
                (discrete && r.label == "a")
                    || (r.label != "a"
                        && n > r.lo
                        && r.hi.as_ref().map_or(true, |h| &n < h))
            })
            .map(|r| r.label.clone());
        out.push(CurvePoint { n: n.clone(), energy, region, discrete });
        n += step.clone();
    }
    Ok(out)
}

/// Region classification boundaries exposed for tests: the intervals of
/// degree v where the family's overshoot energy is negative.
pub fn overshoot_negative_ranges(fp: &FamilyParams) -> Vec<(Rational, Option<Rational>)> {
    match fp {
        FamilyParams::Morse { h, .. }
        | FamilyParams::Soliton { h }
        | FamilyParams::HypSymTop { h, .. } => vec![(rint(2) * h, None)],
        FamilyParams::RosenMorse { h, mu } => {
            let r = mu / h;
            vec![
                (h - &r, Some(h.clone())),
                (h.clone(), Some(h + &r)),
                (rint(2) * h, None),
            ]
        }
        FamilyParams::KeplerHyp { g, mu } => vec![(mu / g - g, None)],
        FamilyParams::HypDpt { g, h } => vec![(h - g, None)],
    }
}

pub fn pow_rat(base: &Rational, k: i64) -> Rational {
    pow_i(base, k)
}

pub fn bigint_to_i64(b: &BigInt) -> Option<i64> {
    b.to_i64()
}
