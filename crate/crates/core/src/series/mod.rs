//! Multigraded generating series of section counts.
//!
//! Series are rational functions whose denominators are products of
//! binomials `1 - t^v`. The pieces here rationalize sampled counts: a
//! quasi-polynomial fitter, one-variable Poincaré series, simplicial cone
//! series, inclusion–exclusion over cone covers, and the chamber reduction for
//! several big divisors on a surface.

mod cone;
mod poly;
mod quasi;
mod rational;

use thiserror::Error;

use crate::cones::ConeError;
use crate::zariski::ZariskiError;

pub use cone::{
    chamber_reduced_series, cone_series, inclusion_exclusion, AffineOracle, CachedOracle, ChamberSeries,
    FnOracle, H0Oracle, PieceReport, SeriesOptions, TableOracle,
};
pub use poly::MultiPoly;
pub use quasi::{poincare_series, quasi_poly_fit, QuasiPolynomial};
pub use rational::RationalSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("denominator factor with zero exponent vector")]
    ZeroDenominatorExponent,
    #[error("series are over different variables ({0} vs {1})")]
    VariableMismatch(String, String),
    #[error("Laurent factor (1 - {0}) needs a grading positive on it")]
    NeedsGrading(String),
    #[error("series parse error: {0}")]
    Parse(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("no quasi-polynomial fit within the given period and sample length")]
    NoFit,
    #[error("not rational within the verification window")]
    NotRationalWithinWindow,
    #[error("coset {0} is not rational within the verification window")]
    CosetNotRationalWithinWindow(String),
    #[error("h0 oracle failed: {0}")]
    Oracle(String),
    #[error("divisor {0} is not big")]
    NotBig(String),
    #[error("divisor {0} must be integral")]
    NotIntegral(String),
    #[error("no compatible shift up to {0}")]
    ShiftNotFound(usize),
    #[error("chamber {gamma}, simplex {simplex}: {source}")]
    Piece { gamma: String, simplex: String, source: Box<SeriesError> },
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Zariski(#[from] ZariskiError),
}

/// `["t"]` for one variable, otherwise `["t1", ..., "tl"]`.
pub fn default_vars(l: usize) -> Vec<String> {
    if l == 1 {
        vec!["t".into()]
    } else {
        (1..=l).map(|i| format!("t{i}")).collect()
    }
}
