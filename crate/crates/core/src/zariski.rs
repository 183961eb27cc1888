//! Zariski decomposition `D = P + N` of pseudo-effective divisors.
//!
//! The decomposition is computed by growing the support of `N`: start with the
//! curves meeting `D` negatively, solve `(D - N) . C = 0` on the current
//! support, add every curve the new `P` meets negatively, and repeat until `P`
//! is nef. Pseudo-effectivity is not assumed; the iteration fails loudly when
//! the input cannot be decomposed.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{is_negative_definite, solve_linear, ExactError, RatVector, Rational};
use crate::surface::{Divisor, SurfaceError, SurfaceLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZariskiError {
    #[error("divisor is not pseudo-effective relative to the curve catalogue: {0}")]
    NotPseudoEffective(String),
    #[error("curve catalogue is inconsistent: support system is underdetermined")]
    InconsistentCatalogue,
    #[error("fixed-part oracle failed: {0}")]
    Oracle(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Nef part, negative part and the curve coefficients of the negative part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZariskiPair {
    pub positive: Divisor,
    pub negative: Divisor,
    pub support: BTreeSet<usize>,
    pub coefficients: BTreeMap<usize, Rational>,
}

impl ZariskiPair {
    /// Coefficient of curve `i` in `N` (zero off the support).
    pub fn coefficient(&self, i: usize) -> Rational {
        self.coefficients.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Dense coefficient vector of `N` over the whole catalogue.
    pub fn coefficient_vector(&self, num_curves: usize) -> Vec<Rational> {
        (0..num_curves).map(|i| self.coefficient(i)).collect()
    }
}

/// Solves `(D - sum_j x_j C_j) . C_i = 0` for `i, j` in `support`.
pub(crate) fn solve_on_support(
    s: &SurfaceLattice,
    d: &Divisor,
    support: &[usize],
) -> Result<Vec<Rational>, ExactError> {
    if support.is_empty() {
        return Ok(Vec::new());
    }
    let gram = s.gram(support);
    let rhs = RatVector::new(support.iter().map(|&i| s.pair_curve(d, i)).collect());
    Ok(solve_linear(&gram, &rhs)?.into_vec())
}

pub fn zariski_decompose(s: &SurfaceLattice, d: &Divisor) -> Result<ZariskiPair, ZariskiError> {
    if d.dim() != s.rank() {
        return Err(SurfaceError::DimensionMismatch { expected: s.rank(), found: d.dim() }.into());
    }
    let n = s.num_curves();
    let mut support: BTreeSet<usize> =
        (0..n).filter(|&i| s.pair_curve(d, i).is_negative()).collect();
    // The support only grows, so at most n + 1 rounds are needed.
    for _ in 0..=n {
        let idx: Vec<usize> = support.iter().copied().collect();
        let x = match solve_on_support(s, d, &idx) {
            Ok(x) => x,
            Err(ExactError::Underdetermined(_)) => return Err(ZariskiError::InconsistentCatalogue),
            Err(ExactError::NoSolution) => {
                return Err(ZariskiError::NotPseudoEffective("support system is singular".into()))
            }
            Err(e) => return Err(SurfaceError::from(e).into()),
        };
        if !is_negative_definite(&s.gram(&idx)).map_err(SurfaceError::from)? {
            return Err(ZariskiError::NotPseudoEffective(format!(
                "support {:?} is not negative definite",
                idx.iter().map(|&i| &s.labels()[i]).collect::<Vec<_>>()
            )));
        }
        if let Some(k) = x.iter().position(Signed::is_negative) {
            return Err(ZariskiError::NotPseudoEffective(format!(
                "coefficient of {} in N is negative",
                s.labels()[idx[k]]
            )));
        }
        let mut coeffs = vec![Rational::zero(); n];
        for (&i, xi) in idx.iter().zip(&x) {
            coeffs[i] = xi.clone();
        }
        let negative = s.combine_curves(&coeffs);
        let positive = d - &negative;
        let offending: Vec<usize> =
            (0..n).filter(|&i| s.pair_curve(&positive, i).is_negative()).collect();
        if offending.is_empty() {
            let coefficients: BTreeMap<usize, Rational> = idx
                .iter()
                .zip(x)
                .filter(|(_, c)| c.is_positive())
                .map(|(&i, c)| (i, c))
                .collect();
            return Ok(ZariskiPair {
                positive,
                negative,
                support: coefficients.keys().copied().collect(),
                coefficients,
            });
        }
        support.extend(offending);
    }
    Err(ZariskiError::NotPseudoEffective("support iteration did not stabilize".into()))
}

/// Checks every defining property of a Zariski decomposition of `d`,
/// returning a description of the first violation.
pub fn check_axioms(s: &SurfaceLattice, d: &Divisor, z: &ZariskiPair) -> Result<(), String> {
    if &(&z.positive + &z.negative) != d {
        return Err("P + N != D".into());
    }
    if !s.is_nef(&z.positive) {
        return Err("P is not nef".into());
    }
    if z.coefficients.values().any(|c| !c.is_positive()) {
        return Err("N has a non-positive coefficient on its support".into());
    }
    let coeffs = z.coefficient_vector(s.num_curves());
    if s.combine_curves(&coeffs) != z.negative {
        return Err("N does not match its curve coefficients".into());
    }
    let supp: Vec<usize> = z.support.iter().copied().collect();
    if supp.iter().any(|&i| !s.pair_curve(&z.positive, i).is_zero()) {
        return Err("P meets a support curve nontrivially".into());
    }
    if !is_negative_definite(&s.gram(&supp)).map_err(|e| e.to_string())? {
        return Err("support is not negative definite".into());
    }
    if !s.pair(&z.positive, &z.negative).map_err(|e| e.to_string())?.is_zero() {
        return Err("P . N != 0".into());
    }
    Ok(())
}

/// True iff `(P1 + P2) . (N1 + N2) = 0`.
pub fn compatible(s: &SurfaceLattice, d1: &Divisor, d2: &Divisor) -> Result<bool, ZariskiError> {
    compatible_all(s, &[d1.clone(), d2.clone()])
}

/// True iff `(sum P_i) . (sum N_i) = 0` over all given divisors.
pub fn compatible_all(s: &SurfaceLattice, ds: &[Divisor]) -> Result<bool, ZariskiError> {
    let pairs = ds.iter().map(|d| zariski_decompose(s, d)).collect::<Result<Vec<_>, _>>()?;
    Ok(pairs_compatible(s, &pairs))
}

pub(crate) fn pairs_compatible(s: &SurfaceLattice, pairs: &[ZariskiPair]) -> bool {
    let zero = Divisor::zero(s.rank());
    let p = pairs.iter().fold(zero.clone(), |acc, z| &acc + &z.positive);
    let n = pairs.iter().fold(zero, |acc, z| &acc + &z.negative);
    s.pair(&p, &n).map(|v| v.is_zero()).unwrap_or(false)
}

/// Every decomposition found by trying each negative definite support set,
/// with strictly positive coefficients on it.
pub fn brute_force_decompositions(s: &SurfaceLattice, d: &Divisor) -> Vec<ZariskiPair> {
    let n = s.num_curves();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(idx) = stack.pop() {
        let start = idx.last().map_or(0, |&i| i + 1);
        for j in start..n {
            let mut next = idx.clone();
            next.push(j);
            if is_negative_definite(&s.gram(&next)).unwrap_or(false) {
                stack.push(next);
            }
        }
        let Ok(x) = solve_on_support(s, d, &idx) else { continue };
        if x.iter().any(|c| !c.is_positive()) {
            continue;
        }
        let mut coeffs = vec![Rational::zero(); n];
        for (&i, xi) in idx.iter().zip(&x) {
            coeffs[i] = xi.clone();
        }
        let negative = s.combine_curves(&coeffs);
        let positive = d - &negative;
        if s.is_nef(&positive) {
            out.push(ZariskiPair {
                positive,
                negative,
                support: idx.iter().copied().collect(),
                coefficients: idx.iter().copied().zip(x).collect(),
            });
        }
    }
    out
}

/// Supplies the fixed part of a complete linear series `|D|` for integral `D`,
/// as coordinates over prime divisors.
pub trait FixedPartOracle {
    fn fixed_part(&self, d: &RatVector) -> Result<RatVector, String>;
}

/// Normalized fixed parts `F_{|nD|} / n` for every `n <= n_max` with `nD`
/// integral, in increasing `n`.
pub fn asymptotic_fixed_part(
    oracle: &dyn FixedPartOracle,
    d: &RatVector,
    n_max: u64,
) -> Result<Vec<(u64, RatVector)>, ZariskiError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let nq = Rational::from_integer(BigInt::from(n));
        let nd = d.scale(&nq);
        if !nd.is_integral() {
            continue;
        }
        let f = oracle.fixed_part(&nd).map_err(ZariskiError::Oracle)?;
        out.push((n, f.scale(&(Rational::one() / nq))));
    }
    Ok(out)
}
