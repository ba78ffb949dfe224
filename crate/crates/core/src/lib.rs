//! Exact construction and verification of rational Darboux-Crum extensions
//! of six solvable potentials with finitely many bound states.
//!
//! The crate splits into an exact layer (big rationals, Gaussian rationals,
//! polynomials, Sturm counting, rational functions of t = e^x), the family
//! data layer, seed construction and classification, the multi-seed
//! extension machinery, and a numeric verification layer (double-exponential
//! quadrature and a finite-difference eigensolver).

pub mod error;
pub mod extension;
pub mod families;
pub mod gammafn;
pub mod gaussian;
pub mod orthopoly;
pub mod poly;
pub mod prefactor;
pub mod ratfun;
pub mod rational;
pub mod seeds;
pub mod sturm;

pub use error::{Error, Result};
pub use families::{FamilyParams, FamilyTag, Params};
pub use gaussian::GaussianRational;
pub use poly::{poly_proportional, poly_wronskian, PolyQ};
pub use rational::Rational;
pub use sturm::{sturm_count_roots, OpenInterval};
