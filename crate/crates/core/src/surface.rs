//! A smooth projective surface presented by its divisor lattice.
//!
//! Nefness and effectivity are always relative to the finite catalogue of
//! irreducible curve classes supplied with the lattice.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{fmt_rational, parse_rational, ExactError, RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("divisor has dimension {found}, lattice rank is {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("intersection form is not symmetric at ({row}, {col})")]
    FormNotSymmetric { row: usize, col: usize },
    #[error("intersection form entry ({row}, {col}) is not an integer")]
    FormNotIntegral { row: usize, col: usize },
    #[error("curve {0} has a non-integral class")]
    CurveNotIntegral(String),
    #[error("curve {0} has the zero class")]
    ZeroCurve(String),
    #[error("curve class of {0} duplicates curve {1}")]
    DuplicateCurve(String, String),
    #[error("{0} names given for a lattice of rank {1}")]
    BadBasisNames(usize, usize),
    #[error("coefficient of curve {0} is negative: not an effective presentation")]
    NotEffective(usize),
    #[error("cannot parse divisor {0:?}: {1}")]
    Parse(String, String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A rational divisor class in the lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor(pub RatVector);

impl Divisor {
    pub fn new(coords: RatVector) -> Self {
        Divisor(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Divisor(RatVector::from_i64(coords))
    }

    pub fn zero(rank: usize) -> Self {
        Divisor(RatVector::zeros(rank))
    }

    pub fn coords(&self) -> &RatVector {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn scale(&self, c: &Rational) -> Divisor {
        Divisor(self.0.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.0.is_integral()
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        Divisor(&self.0 + &rhs.0)
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        Divisor(&self.0 - &rhs.0)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceLattice {
    basis: Vec<String>,
    form: RatMatrix,
    curves: Vec<RatVector>,
    labels: Vec<String>,
    // form * curve, cached for the many curve pairings
    curve_duals: Vec<RatVector>,
}

impl SurfaceLattice {
    /// Builds a lattice, validating symmetry, integrality and the curve list.
    pub fn new(
        basis: Vec<String>,
        form: RatMatrix,
        curves: Vec<(String, RatVector)>,
    ) -> Result<Self, SurfaceError> {
        let rank = form.rows();
        if form.cols() != rank {
            return Err(SurfaceError::DimensionMismatch { expected: rank, found: form.cols() });
        }
        if basis.len() != rank {
            return Err(SurfaceError::BadBasisNames(basis.len(), rank));
        }
        for i in 0..rank {
            for j in 0..rank {
                if !form.get(i, j).is_integer() {
                    return Err(SurfaceError::FormNotIntegral { row: i, col: j });
                }
                if form.get(i, j) != form.get(j, i) {
                    let (row, col) = (i.min(j), i.max(j));
                    return Err(SurfaceError::FormNotSymmetric { row, col });
                }
            }
        }
        let mut labels: Vec<String> = Vec::with_capacity(curves.len());
        let mut classes: Vec<RatVector> = Vec::with_capacity(curves.len());
        for (name, class) in curves {
            if class.dim() != rank {
                return Err(SurfaceError::DimensionMismatch { expected: rank, found: class.dim() });
            }
            if !class.is_integral() {
                return Err(SurfaceError::CurveNotIntegral(name));
            }
            if class.is_zero() {
                return Err(SurfaceError::ZeroCurve(name));
            }
            if let Some(k) = classes.iter().position(|c| *c == class) {
                return Err(SurfaceError::DuplicateCurve(name, labels[k].clone()));
            }
            labels.push(name);
            classes.push(class);
        }
        let curve_duals = classes.iter().map(|c| form.mul_vec(c)).collect::<Result<_, _>>()?;
        Ok(SurfaceLattice { basis, form, curves: classes, labels, curve_duals })
    }

    pub fn rank(&self) -> usize {
        self.form.rows()
    }

    pub fn form(&self) -> &RatMatrix {
        &self.form
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn curves(&self) -> &[RatVector] {
        &self.curves
    }

    pub fn curve(&self, i: usize) -> Divisor {
        Divisor(self.curves[i].clone())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_curves(&self) -> usize {
        self.curves.len()
    }

    pub fn curve_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    fn check(&self, d: &Divisor) -> Result<(), SurfaceError> {
        if d.dim() != self.rank() {
            return Err(SurfaceError::DimensionMismatch { expected: self.rank(), found: d.dim() });
        }
        Ok(())
    }

    /// Intersection number `D1 . D2`.
    pub fn pair(&self, d1: &Divisor, d2: &Divisor) -> Result<Rational, SurfaceError> {
        self.check(d1)?;
        self.check(d2)?;
        Ok(d1.0.dot(&self.form.mul_vec(&d2.0)?))
    }

    /// `D . C_i` for the catalogued curve `i`. Panics on a rank mismatch.
    pub fn pair_curve(&self, d: &Divisor, i: usize) -> Rational {
        d.0.dot(&self.curve_duals[i])
    }

    /// The linear functional `D -> D . C_i` as a coefficient vector.
    pub fn curve_functional(&self, i: usize) -> &RatVector {
        &self.curve_duals[i]
    }

    pub fn self_intersection(&self, i: usize) -> Rational {
        self.curves[i].dot(&self.curve_duals[i])
    }

    /// Nef relative to the curve catalogue.
    pub fn is_nef(&self, d: &Divisor) -> bool {
        d.dim() == self.rank() && (0..self.curves.len()).all(|i| !self.pair_curve(d, i).is_negative())
    }

    /// Gram matrix `(C_i . C_j)` of a set of curves.
    pub fn gram(&self, idx: &[usize]) -> RatMatrix {
        let data = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.curves[i].dot(&self.curve_duals[j]))
            .collect();
        RatMatrix::new(idx.len(), idx.len(), data).expect("square by construction")
    }

    /// `sum_i coeffs[i] * C_i`.
    pub fn combine_curves(&self, coeffs: &[Rational]) -> Divisor {
        let mut acc = RatVector::zeros(self.rank());
        for (c, class) in coeffs.iter().zip(&self.curves) {
            if !c.is_zero() {
                acc = &acc + &class.scale(c);
            }
        }
        Divisor(acc)
    }

    /// Indices of the curves with positive coefficient in an effective
    /// presentation `sum_i coeffs[i] * C_i`.
    pub fn support(&self, coeffs: &[Rational]) -> Result<BTreeSet<usize>, SurfaceError> {
        if coeffs.len() != self.curves.len() {
            return Err(SurfaceError::DimensionMismatch {
                expected: self.curves.len(),
                found: coeffs.len(),
            });
        }
        if let Some(i) = coeffs.iter().position(Signed::is_negative) {
            return Err(SurfaceError::NotEffective(i));
        }
        Ok(coeffs.iter().enumerate().filter(|(_, c)| c.is_positive()).map(|(i, _)| i).collect())
    }

    /// Parses `"2E + 1/2 f"`, `"-E+3f"` or a coordinate list `"[2, 1/2]"`.
    /// Names resolve to basis vectors first, then to catalogued curves.
    pub fn parse_divisor(&self, s: &str) -> Result<Divisor, SurfaceError> {
        let err = |m: &str| SurfaceError::Parse(s.to_string(), m.to_string());
        let t = s.trim();
        if t.starts_with('[') || t.starts_with('(') || t.contains(',') {
            let inner = t.trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
            let coords = inner
                .split(',')
                .map(|x| parse_rational(x).ok_or_else(|| err("bad coordinate")))
                .collect::<Result<Vec<_>, _>>()?;
            let d = Divisor(RatVector::new(coords));
            self.check(&d)?;
            return Ok(d);
        }
        let mut acc = RatVector::zeros(self.rank());
        if t == "0" {
            return Ok(Divisor(acc));
        }
        for (sign, term) in split_signed_terms(t).map_err(|m| err(&m))? {
            let split = term
                .find(|c: char| c.is_alphabetic() || c == '_')
                .ok_or_else(|| err("term without a name"))?;
            let (coef, name) = term.split_at(split);
            let coef = coef.trim().trim_end_matches('*').trim();
            let c = if coef.is_empty() {
                Rational::from_integer(1.into())
            } else {
                parse_rational(coef).ok_or_else(|| err("bad coefficient"))?
            };
            let c = if sign { -c } else { c };
            let name = name.trim();
            let v = if let Some(k) = self.basis.iter().position(|b| b == name) {
                RatVector::unit(self.rank(), k)
            } else if let Some(k) = self.curve_index(name) {
                self.curves[k].clone()
            } else {
                return Err(err(&format!("unknown name {name}")));
            };
            acc = &acc + &v.scale(&c);
        }
        Ok(Divisor(acc))
    }

    /// Canonical text form in basis names, e.g. `"1/2 E + 1 f"`; `"0"` for zero.
    pub fn format_divisor(&self, d: &Divisor) -> String {
        format_combination(&self.basis, d.coords().as_slice())
    }
}

/// `"c1 n1 + c2 n2 - c3 n3"` over nonzero coefficients; `"0"` when all vanish.
pub fn format_combination(names: &[String], coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            out.push_str(&format!("{} {}", fmt_rational(c), name));
        } else if c.is_negative() {
            out.push_str(&format!(" - {} {}", fmt_rational(&-c), name));
        } else {
            out.push_str(&format!(" + {} {}", fmt_rational(c), name));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits `"a - b + c"` into `(negated, term)` pairs. A `/` never splits.
pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>, String> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                if !current.trim().is_empty() {
                    terms.push((negative, current.trim().to_string()));
                    current.clear();
                    negative = ch == '-';
                } else if ch == '-' {
                    negative = !negative;
                }
            }
            _ => current.push(ch),
        }
    }
    if current.trim().is_empty() {
        return Err(if terms.is_empty() { "empty expression" } else { "dangling sign" }.into());
    }
    terms.push((negative, current.trim().to_string()));
    Ok(terms)
}
