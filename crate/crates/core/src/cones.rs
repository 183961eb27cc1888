//! Rational polyhedral cones in double description, simplicial cones and
//! their lattice cosets, and the chamber decomposition of a cone of big
//! divisors by Zariski support.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{
    is_negative_definite, smith_normal_form, ExactError, RatMatrix, RatVector, Rational,
};
use crate::surface::{Divisor, SurfaceError, SurfaceLattice};
use crate::zariski::{solve_on_support, zariski_decompose, ZariskiError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("point is not in the cone")]
    NotInCone,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generators are not linearly independent")]
    NotIndependent,
    #[error("generators must be integral")]
    NotIntegral,
    #[error("curve set is not negative definite")]
    GammaNotNegativeDefinite,
    #[error("double description is inconsistent")]
    Inconsistent,
    #[error(transparent)]
    Zariski(#[from] ZariskiError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

impl From<ExactError> for ConeError {
    fn from(e: ExactError) -> Self {
        ConeError::Surface(e.into())
    }
}

/// Motzkin double description: converts `{x : E x = 0, A x >= 0}` into a
/// lineality basis and extreme rays (primitive, modulo lineality).
fn double_description(
    dim: usize,
    eqs: &[RatVector],
    ineqs: &[RatVector],
) -> (Vec<RatVector>, Vec<RatVector>) {
    let mut lines: Vec<RatVector> = if eqs.is_empty() {
        (0..dim).map(|i| RatVector::unit(dim, i)).collect()
    } else {
        RatMatrix::from_row_vectors(eqs, dim).expect("equation width").nullspace()
    };
    // Each ray carries the set of processed inequalities it makes tight.
    let mut rays: Vec<(RatVector, Vec<bool>)> = Vec::new();
    for (k, a) in ineqs.iter().enumerate() {
        if let Some(li) = lines.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l = lines.remove(li);
            if a.dot(&l).is_negative() {
                l = -&l;
            }
            let al = a.dot(&l);
            let project = |v: &RatVector| -> RatVector {
                let c = a.dot(v) / &al;
                v - &(&l * &c)
            };
            lines = lines.iter().map(|v| project(v)).collect();
            for (r, z) in rays.iter_mut() {
                *r = project(r).primitive();
                z.push(true);
            }
            let mut z = vec![true; k];
            z.push(false);
            rays.push((l.primitive(), z));
            continue;
        }
        let vals: Vec<Rational> = rays.iter().map(|(r, _)| a.dot(r)).collect();
        let mut next: Vec<(RatVector, Vec<bool>)> = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            if !vals[i].is_negative() {
                let mut z = z.clone();
                z.push(vals[i].is_zero());
                next.push((r.clone(), z));
            }
        }
        for (p, (rp, zp)) in rays.iter().enumerate() {
            if !vals[p].is_positive() {
                continue;
            }
            for (n, (rn, zn)) in rays.iter().enumerate() {
                if !vals[n].is_negative() {
                    continue;
                }
                let common: Vec<bool> = zp.iter().zip(zn).map(|(x, y)| *x && *y).collect();
                let blocked = rays.iter().enumerate().any(|(o, (_, zo))| {
                    o != p && o != n && common.iter().zip(zo).all(|(c, z)| !c || *z)
                });
                if blocked {
                    continue;
                }
                let v = &(rn * &vals[p]) - &(rp * &vals[n]);
                let mut z = common;
                z.push(true);
                next.push((v.primitive(), z));
            }
        }
        rays = next;
    }
    let mut out: Vec<RatVector> = Vec::new();
    for (r, _) in rays {
        if !r.is_zero() && !out.contains(&r) {
            out.push(r);
        }
    }
    (lines, out)
}

/// Canonical lineality basis (reduced row echelon) and rays reduced modulo it.
fn canonical(dim: usize, lines: &[RatVector], rays: &[RatVector]) -> (Vec<RatVector>, Vec<RatVector>) {
    let (basis, pivots) = if lines.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let (r, piv) = RatMatrix::from_row_vectors(lines, dim).expect("line width").rref();
        ((0..piv.len()).map(|i| r.row(i)).collect::<Vec<_>>(), piv)
    };
    let mut out: Vec<RatVector> = rays
        .iter()
        .map(|r| {
            let mut v = r.clone();
            for (b, &c) in basis.iter().zip(&pivots) {
                let k = v[c].clone();
                if !k.is_zero() {
                    v = &v - &(b * &k);
                }
            }
            v.primitive()
        })
        .filter(|v| !v.is_zero())
        .collect();
    out.sort();
    out.dedup();
    (basis, out)
}

/// A rational polyhedral cone held in both descriptions.
#[derive(Clone, Debug)]
pub struct RationalCone {
    ambient: usize,
    generators: Vec<RatVector>,
    rays: Vec<RatVector>,
    lines: Vec<RatVector>,
    facets: Vec<RatVector>,
    equations: Vec<RatVector>,
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rays == other.rays && self.lines == other.lines
    }
}

impl Eq for RationalCone {}

impl RationalCone {
    /// Cone spanned by `generators`; zero vectors are ignored and each
    /// generator is scaled to a primitive integer vector.
    pub fn from_generators(ambient: usize, generators: &[RatVector]) -> Result<Self, ConeError> {
        let mut gens: Vec<RatVector> = Vec::new();
        for g in generators {
            if g.dim() != ambient {
                return Err(ConeError::DimensionMismatch { expected: ambient, found: g.dim() });
            }
            let p = g.primitive();
            if !p.is_zero() && !gens.contains(&p) {
                gens.push(p);
            }
        }
        let (eqs, facets) = double_description(ambient, &[], &gens);
        let (eqs, facets) = canonical(ambient, &eqs, &facets);
        let (lines, rays) = double_description(ambient, &eqs, &facets);
        let (lines, rays) = canonical(ambient, &lines, &rays);
        let cone = RationalCone { ambient, generators: gens, rays, lines, facets, equations: eqs };
        if !cone.generators.iter().all(|g| cone.contains(g)) {
            return Err(ConeError::Inconsistent);
        }
        Ok(cone)
    }

    /// The cone `{x : e . x = 0 for e in equations, f . x >= 0 for f in inequalities}`.
    pub fn from_inequalities(
        ambient: usize,
        inequalities: &[RatVector],
        equations: &[RatVector],
    ) -> Result<Self, ConeError> {
        for v in inequalities.iter().chain(equations) {
            if v.dim() != ambient {
                return Err(ConeError::DimensionMismatch { expected: ambient, found: v.dim() });
            }
        }
        let (lines, rays) = double_description(ambient, equations, inequalities);
        let mut gens = rays;
        for l in &lines {
            gens.push(l.clone());
            gens.push(-l);
        }
        let cone = Self::from_generators(ambient, &gens)?;
        let ok = inequalities.iter().all(|f| cone.rays.iter().all(|r| !f.dot(r).is_negative()))
            && equations.iter().all(|e| cone.rays.iter().chain(&cone.lines).all(|r| e.dot(r).is_zero()));
        if !ok {
            return Err(ConeError::Inconsistent);
        }
        Ok(cone)
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_generators(ambient, &[]).expect("zero cone")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Generators as supplied (primitive, deduplicated, zeros dropped).
    pub fn generators(&self) -> &[RatVector] {
        &self.generators
    }

    /// Extreme rays modulo the lineality space.
    pub fn rays(&self) -> &[RatVector] {
        &self.rays
    }

    pub fn lines(&self) -> &[RatVector] {
        &self.lines
    }

    /// Facet normals `f`, meaning `f . x >= 0`.
    pub fn facets(&self) -> &[RatVector] {
        &self.facets
    }

    /// Normals of the linear span, meaning `e . x = 0`.
    pub fn equations(&self) -> &[RatVector] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lines.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        x.dim() == self.ambient
            && self.equations.iter().all(|e| e.dot(x).is_zero())
            && self.facets.iter().all(|f| !f.dot(x).is_negative())
    }

    /// True iff `x` lies in the relative interior.
    pub fn contains_relative_interior(&self, x: &RatVector) -> bool {
        self.contains(x) && self.facets.iter().all(|f| f.dot(x).is_positive())
    }

    /// Sum of the extreme rays: a point of the relative interior.
    pub fn interior_point(&self) -> RatVector {
        self.rays.iter().fold(RatVector::zeros(self.ambient), |acc, r| &acc + r)
    }

    pub fn intersect(&self, other: &RationalCone) -> Result<RationalCone, ConeError> {
        if other.ambient != self.ambient {
            return Err(ConeError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let ineqs: Vec<RatVector> = self.facets.iter().chain(&other.facets).cloned().collect();
        let eqs: Vec<RatVector> = self.equations.iter().chain(&other.equations).cloned().collect();
        Self::from_inequalities(self.ambient, &ineqs, &eqs)
    }

    /// Adds the half-spaces `f . x >= 0` to the description.
    pub fn restrict(&self, inequalities: &[RatVector]) -> Result<RationalCone, ConeError> {
        let ineqs: Vec<RatVector> = self.facets.iter().chain(inequalities).cloned().collect();
        Self::from_inequalities(self.ambient, &ineqs, &self.equations)
    }

    fn active(&self, p: &RatVector) -> Result<Vec<bool>, ConeError> {
        if !self.contains(p) {
            return Err(ConeError::NotInCone);
        }
        Ok(self.facets.iter().map(|f| f.dot(p).is_zero()).collect())
    }

    /// Smallest face of the cone containing `p`.
    pub fn minimal_face(&self, p: &RatVector) -> Result<RationalCone, ConeError> {
        let act = self.active(p)?;
        let mut gens: Vec<RatVector> = self
            .rays
            .iter()
            .filter(|r| self.facets.iter().zip(&act).all(|(f, a)| !a || f.dot(r).is_zero()))
            .cloned()
            .collect();
        for l in &self.lines {
            gens.push(l.clone());
            gens.push(-l);
        }
        Self::from_generators(self.ambient, &gens)
    }

    /// `p` is more general than `q` iff the minimal face of `p` contains `q`.
    pub fn is_more_general(&self, p: &RatVector, q: &RatVector) -> Result<bool, ConeError> {
        let (ap, aq) = (self.active(p)?, self.active(q)?);
        Ok(ap.iter().zip(&aq).all(|(x, y)| !x || *y))
    }

    /// Placing triangulation of a pointed cone over its generators, in input
    /// order.
    pub fn triangulate(&self) -> Vec<SimplicialCone> {
        triangulate_indices(&self.generators)
            .into_iter()
            .map(|s| SimplicialCone { generators: s.iter().map(|&i| self.generators[i].clone()).collect() })
            .collect()
    }
}

impl fmt::Display for RationalCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        let mut first = true;
        for r in &self.rays {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{r}")?;
        }
        for l in &self.lines {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "±{l}")?;
        }
        write!(f, ">")
    }
}

/// Simplices of the placing triangulation as index sets into `gens`.
pub(crate) fn triangulate_indices(gens: &[RatVector]) -> Vec<Vec<usize>> {
    let Some(dim) = gens.first().map(RatVector::dim) else {
        return Vec::new();
    };
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    let mut placed: Vec<usize> = Vec::new();
    let mut rank = 0;
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut with: Vec<RatVector> = placed.iter().map(|&j| gens[j].clone()).collect();
        with.push(g.clone());
        let new_rank = RatMatrix::from_row_vectors(&with, dim).expect("width").rank();
        if new_rank > rank {
            if simplices.is_empty() {
                simplices.push(vec![i]);
            } else {
                for s in simplices.iter_mut() {
                    s.push(i);
                }
            }
            rank = new_rank;
            placed.push(i);
            continue;
        }
        let current = RationalCone::from_generators(dim, &with[..with.len() - 1]).expect("placed cone");
        if current.contains(g) {
            continue;
        }
        let visible: Vec<&RatVector> = current.facets().iter().filter(|f| f.dot(g).is_negative()).collect();
        let mut added = Vec::new();
        for s in &simplices {
            for drop in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, &x)| x).collect();
                if visible.iter().any(|f| face.iter().all(|&x| f.dot(&gens[x]).is_zero())) {
                    let mut t = face;
                    t.push(i);
                    added.push(t);
                }
            }
        }
        simplices.extend(added);
        placed.push(i);
    }
    simplices
}

/// A cone on linearly independent integer generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplicialCone {
    generators: Vec<RatVector>,
}

impl SimplicialCone {
    pub fn new(generators: Vec<RatVector>) -> Result<Self, ConeError> {
        if let Some(d) = generators.first().map(RatVector::dim) {
            if let Some(g) = generators.iter().find(|g| g.dim() != d) {
                return Err(ConeError::DimensionMismatch { expected: d, found: g.dim() });
            }
            if RatMatrix::from_row_vectors(&generators, d)?.rank() != generators.len() {
                return Err(ConeError::NotIndependent);
            }
        }
        if generators.iter().any(|g| !g.is_integral()) {
            return Err(ConeError::NotIntegral);
        }
        Ok(SimplicialCone { generators })
    }

    pub fn generators(&self) -> &[RatVector] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators.first().map_or(0, RatVector::dim)
    }

    /// Coefficients `l` with `p = sum l_i v_i`, if `p` is in the span.
    pub fn coordinates(&self, p: &RatVector) -> Option<Vec<Rational>> {
        if self.generators.is_empty() {
            return p.is_zero().then(Vec::new);
        }
        let m = RatMatrix::from_row_vectors(&self.generators, p.dim()).ok()?.transpose();
        crate::exact::solve_linear(&m, p).ok().map(RatVector::into_vec)
    }

    pub fn contains(&self, p: &RatVector) -> bool {
        self.coordinates(p).is_some_and(|l| l.iter().all(|x| !x.is_negative()))
    }

    pub fn to_cone(&self) -> RationalCone {
        RationalCone::from_generators(self.ambient_dim(), &self.generators).expect("simplicial cone")
    }

    /// Integer points `sum l_i v_i` with every `l_i` in `[0, 1)`.
    pub fn fundamental_parallelepiped(&self) -> Vec<RatVector> {
        let r = self.generators.len();
        let d = self.ambient_dim();
        if r == 0 {
            return vec![RatVector::zeros(d)];
        }
        // Columns are generators: V l in Z^d iff (Q^-1 l)_i in Z / s_i.
        let a: Vec<Vec<BigInt>> = (0..d)
            .map(|i| self.generators.iter().map(|g| g[i].to_integer()).collect())
            .collect();
        let smith = smith_normal_form(&a);
        let q: Vec<Vec<Rational>> = smith
            .right
            .iter()
            .map(|row| row.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let moduli: Vec<i64> = smith.diag.iter().map(|x| x.to_i64().expect("index fits")).collect();
        let mut out = Vec::new();
        let mut k = vec![0i64; r];
        loop {
            let mu: Vec<Rational> = k.iter().zip(&moduli).map(|(&ki, &si)| Rational::new(ki.into(), si.into())).collect();
            let lambda: Vec<Rational> = q
                .iter()
                .map(|row| {
                    let x: Rational = row.iter().zip(&mu).map(|(a, b)| a * b).sum();
                    &x - x.floor()
                })
                .collect();
            let p = self
                .generators
                .iter()
                .zip(&lambda)
                .fold(RatVector::zeros(d), |acc, (g, l)| &acc + &(g * l));
            out.push(p);
            let mut i = 0;
            while i < r {
                k[i] += 1;
                if k[i] < moduli[i] {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
        }
        out.sort();
        out
    }

    /// The face spanned by the generators this cone shares with `other`.
    pub fn common_face(&self, other: &SimplicialCone) -> SimplicialCone {
        let generators = self.generators.iter().filter(|g| other.generators.contains(g)).cloned().collect();
        SimplicialCone { generators }
    }
}

/// Splits `d = F1 + F2` with `F1` in the span of `gamma` and `F2` orthogonal
/// to every curve of `gamma`.
pub fn sigma_projection(
    s: &SurfaceLattice,
    gamma: &BTreeSet<usize>,
    d: &Divisor,
) -> Result<(Divisor, Divisor), ConeError> {
    let idx: Vec<usize> = gamma.iter().copied().collect();
    if !is_negative_definite(&s.gram(&idx))? {
        return Err(ConeError::GammaNotNegativeDefinite);
    }
    let x = solve_on_support(s, d, &idx).map_err(|_| ConeError::GammaNotNegativeDefinite)?;
    let mut coeffs = vec![Rational::zero(); s.num_curves()];
    for (&i, xi) in idx.iter().zip(x) {
        coeffs[i] = xi;
    }
    let f1 = s.combine_curves(&coeffs);
    let f2 = d - &f1;
    Ok((f1, f2))
}

/// Closure of the set of points of `W` whose negative part has support `gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub gamma: BTreeSet<usize>,
    pub cone: RationalCone,
}

/// Linear functionals giving, on divisors, the support coefficients of
/// `gamma` and the intersections of `F2` with every curve outside it.
fn chamber_inequalities(s: &SurfaceLattice, gamma: &[usize]) -> Option<Vec<RatVector>> {
    let inv = s.gram(gamma).inverse()?;
    let coeff: Vec<RatVector> = (0..gamma.len())
        .map(|k| {
            gamma.iter().enumerate().fold(RatVector::zeros(s.rank()), |acc, (i, &c)| {
                &acc + &(s.curve_functional(c) * inv.get(k, i))
            })
        })
        .collect();
    let mut out = coeff.clone();
    for c in (0..s.num_curves()).filter(|c| !gamma.contains(c)) {
        let mut f = s.curve_functional(c).clone();
        for (k, &g) in gamma.iter().enumerate() {
            let cg = s.curves()[c].dot(s.curve_functional(g));
            f = &f - &(&coeff[k] * &cg);
        }
        out.push(f);
    }
    Some(out)
}

/// Zariski chambers of `w`, sorted by their curve sets.
pub fn zariski_chambers(s: &SurfaceLattice, w: &RationalCone) -> Result<Vec<Chamber>, ConeError> {
    if w.ambient_dim() != s.rank() {
        return Err(ConeError::DimensionMismatch { expected: s.rank(), found: w.ambient_dim() });
    }
    for g in w.generators() {
        zariski_decompose(s, &Divisor::new(g.clone()))?;
    }
    if w.is_zero() {
        return Ok(vec![Chamber { gamma: BTreeSet::new(), cone: w.clone() }]);
    }
    let negative: Vec<usize> =
        (0..s.num_curves()).filter(|&i| s.self_intersection(i).is_negative()).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << negative.len()) {
        let gamma: Vec<usize> =
            negative.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c).collect();
        if !is_negative_definite(&s.gram(&gamma))? {
            continue;
        }
        let Some(ineqs) = chamber_inequalities(s, &gamma) else { continue };
        let cone = w.restrict(&ineqs)?;
        if cone.is_zero() {
            continue;
        }
        let z = zariski_decompose(s, &Divisor::new(cone.interior_point()))?;
        let gamma: BTreeSet<usize> = gamma.into_iter().collect();
        if z.support == gamma {
            out.push(Chamber { gamma, cone });
        }
    }
    out.sort_by(|a, b| a.gamma.cmp(&b.gamma));
    Ok(out)
}

/// Chambers whose dimension equals that of `w`.
pub fn full_dimensional_chambers(
    s: &SurfaceLattice,
    w: &RationalCone,
) -> Result<Vec<Chamber>, ConeError> {
    Ok(zariski_chambers(s, w)?.into_iter().filter(|c| c.cone.dim() == w.dim()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn v(x: &[i64]) -> RatVector {
        RatVector::from_i64(x)
    }

    fn quadrant() -> RationalCone {
        RationalCone::from_generators(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap()
    }

    fn f2() -> SurfaceLattice {
        crate::surface::tests::f2()
    }

    #[test]
    fn double_description_of_quadrant() {
        let q = quadrant();
        assert_eq!(q.facets(), &[v(&[0, 1]), v(&[1, 0])]);
        assert!(q.equations().is_empty());
        let h = RationalCone::from_inequalities(2, &[v(&[1, 0]), v(&[0, 1])], &[]).unwrap();
        assert_eq!(h, q);
    }

    #[test]
    fn redundant_generators_are_pruned() {
        let c = RationalCone::from_generators(2, &[v(&[1, 0]), v(&[1, 1]), v(&[0, 1]), v(&[2, 0])]).unwrap();
        assert_eq!(c.rays(), &[v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(c.generators().len(), 3);
    }

    #[test]
    fn lines_and_half_planes() {
        let h = RationalCone::from_generators(2, &[v(&[1, 0]), v(&[-1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(h.lines(), &[v(&[1, 0])]);
        assert_eq!(h.rays(), &[v(&[0, 1])]);
        assert_eq!(h.facets(), &[v(&[0, 1])]);
        let full = RationalCone::from_inequalities(3, &[], &[]).unwrap();
        assert_eq!(full.lines().len(), 3);
        assert!(full.facets().is_empty());
        let z = RationalCone::zero(3);
        assert!(z.is_zero() && z.dim() == 0 && z.contains(&v(&[0, 0, 0])));
    }

    #[test]
    fn square_pyramid() {
        let c = RationalCone::from_generators(
            3,
            &[v(&[0, 0, 1]), v(&[1, 0, 1]), v(&[1, 1, 1]), v(&[0, 1, 1])],
        )
        .unwrap();
        assert_eq!(c.facets().len(), 4);
        assert_eq!(c.rays().len(), 4);
        assert!(c.contains(&v(&[1, 1, 2])));
        assert!(!c.contains(&v(&[2, 1, 1])));
    }

    #[test]
    fn minimal_faces_of_quadrant() {
        let q = quadrant();
        assert_eq!(q.minimal_face(&v(&[1, 1])).unwrap(), q);
        let ray = RationalCone::from_generators(2, &[v(&[1, 0])]).unwrap();
        assert_eq!(q.minimal_face(&v(&[1, 0])).unwrap(), ray);
        assert!(q.minimal_face(&v(&[0, 0])).unwrap().is_zero());
        assert_eq!(q.minimal_face(&v(&[-1, 0])), Err(ConeError::NotInCone));
    }

    #[test]
    fn generality_order() {
        let q = quadrant();
        assert!(q.is_more_general(&v(&[1, 1]), &v(&[0, 1])).unwrap());
        assert!(q.is_more_general(&v(&[1, 0]), &v(&[0, 0])).unwrap());
        assert!(!q.is_more_general(&v(&[1, 0]), &v(&[0, 1])).unwrap());
        assert!(q.is_more_general(&v(&[3, 0]), &v(&[1, 0])).unwrap());
    }

    #[test]
    fn triangulation_examples() {
        let s = SimplicialCone::new(vec![v(&[1, 0]), v(&[1, 2])]).unwrap();
        assert_eq!(s.to_cone().triangulate(), vec![s.clone()]);
        let c = RationalCone::from_generators(2, &[v(&[1, 0]), v(&[1, 1]), v(&[0, 1])]).unwrap();
        let t = c.triangulate();
        assert_eq!(
            t,
            vec![
                SimplicialCone::new(vec![v(&[1, 0]), v(&[1, 1])]).unwrap(),
                SimplicialCone::new(vec![v(&[1, 1]), v(&[0, 1])]).unwrap(),
            ]
        );
        assert!(RationalCone::zero(2).triangulate().is_empty());
    }

    fn check_triangulation(c: &RationalCone, grid: i64) {
        let t = c.triangulate();
        let d = c.ambient_dim();
        // Covering on a grid of rational points.
        let mut pt = vec![-grid; d];
        loop {
            let p = v(&pt);
            if c.contains(&p) && !p.is_zero() {
                assert!(t.iter().any(|s| s.contains(&p)), "{p} uncovered");
            }
            let mut i = 0;
            while i < d {
                pt[i] += 1;
                if pt[i] <= grid {
                    break;
                }
                pt[i] = -grid;
                i += 1;
            }
            if i == d {
                break;
            }
        }
        // Pairwise intersections are common faces.
        for a in &t {
            for b in &t {
                let meet = a.to_cone().intersect(&b.to_cone()).unwrap();
                assert_eq!(meet, a.common_face(b).to_cone());
            }
        }
    }

    #[test]
    fn cone_over_square_has_two_simplices() {
        let c = RationalCone::from_generators(
            3,
            &[v(&[0, 0, 1]), v(&[1, 0, 1]), v(&[1, 1, 1]), v(&[0, 1, 1])],
        )
        .unwrap();
        let t = c.triangulate();
        assert_eq!(t.len(), 2);
        let shared = t[0].common_face(&t[1]);
        assert_eq!(shared.dim(), 2);
        check_triangulation(&c, 3);
    }

    #[test]
    fn parallelepiped_examples() {
        let s = SimplicialCone::new(vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(s.fundamental_parallelepiped(), vec![v(&[0, 0])]);
        let s = SimplicialCone::new(vec![v(&[1, 0]), v(&[1, 2])]).unwrap();
        assert_eq!(s.fundamental_parallelepiped(), vec![v(&[0, 0]), v(&[1, 1])]);
        let s = SimplicialCone::new(vec![v(&[2])]).unwrap();
        assert_eq!(s.fundamental_parallelepiped(), vec![v(&[0]), v(&[1])]);
    }

    #[test]
    fn parallelepiped_in_lower_dimensional_span() {
        let s = SimplicialCone::new(vec![v(&[2, 0, 2]), v(&[0, 3, 0])]).unwrap();
        let pts = s.fundamental_parallelepiped();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|p| p.is_integral() && s.contains(p)));
    }

    #[test]
    fn sigma_projection_examples() {
        let s = f2();
        let e: BTreeSet<usize> = [0].into();
        let (f1, f2_) = sigma_projection(&s, &e, &Divisor::from_i64(&[2, 1])).unwrap();
        assert_eq!(f1, Divisor::new(RatVector::new(vec![ratio(3, 2), rat(0)])));
        assert_eq!(f2_, Divisor::new(RatVector::new(vec![ratio(1, 2), rat(1)])));
        let d = Divisor::from_i64(&[2, 1]);
        assert_eq!(sigma_projection(&s, &BTreeSet::new(), &d).unwrap(), (Divisor::zero(2), d));
        let d = Divisor::from_i64(&[5, 0]);
        assert_eq!(sigma_projection(&s, &e, &d).unwrap(), (d, Divisor::zero(2)));
        let fset: BTreeSet<usize> = [1].into();
        assert_eq!(
            sigma_projection(&s, &fset, &Divisor::from_i64(&[1, 1])),
            Err(ConeError::GammaNotNegativeDefinite)
        );
    }

    #[test]
    fn f2_chambers() {
        let s = f2();
        let w = RationalCone::from_generators(2, &[v(&[1, 3]), v(&[1, 1])]).unwrap();
        let ch = zariski_chambers(&s, &w).unwrap();
        assert_eq!(ch.len(), 2);
        assert!(ch[0].gamma.is_empty());
        assert_eq!(ch[0].cone, RationalCone::from_generators(2, &[v(&[1, 3]), v(&[1, 2])]).unwrap());
        assert_eq!(ch[1].gamma, BTreeSet::from([0]));
        assert_eq!(ch[1].cone, RationalCone::from_generators(2, &[v(&[1, 2]), v(&[1, 1])]).unwrap());
    }

    #[test]
    fn trivial_chambers() {
        let s = f2();
        let nef = RationalCone::from_generators(2, &[v(&[1, 2]), v(&[0, 1])]).unwrap();
        let ch = zariski_chambers(&s, &nef).unwrap();
        assert_eq!(ch, vec![Chamber { gamma: BTreeSet::new(), cone: nef }]);
        let e = RationalCone::from_generators(2, &[v(&[1, 0])]).unwrap();
        let ch = zariski_chambers(&s, &e).unwrap();
        assert_eq!(ch, vec![Chamber { gamma: BTreeSet::from([0]), cone: e }]);
    }

    proptest! {
        #[test]
        fn dd_round_trip(gens in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 1..6)) {
            let gs: Vec<RatVector> = gens.iter().map(|g| v(g)).collect();
            let c = RationalCone::from_generators(3, &gs).unwrap();
            let back = RationalCone::from_inequalities(3, c.facets(), c.equations()).unwrap();
            prop_assert_eq!(&back, &c);
            for g in &gs {
                prop_assert!(c.contains(g));
            }
            // Every ray is extreme: dropping it changes the cone.
            if c.is_pointed() {
                for r in c.rays() {
                    let rest: Vec<RatVector> = c.rays().iter().filter(|x| *x != r).cloned().collect();
                    let smaller = RationalCone::from_generators(3, &rest).unwrap();
                    prop_assert!(!smaller.contains(r));
                }
            }
        }

        #[test]
        fn triangulations_cover_and_meet_in_faces(gens in proptest::collection::vec(proptest::collection::vec(0i64..4, 3), 1..6)) {
            let gs: Vec<RatVector> = gens.iter().map(|g| v(g)).collect();
            let c = RationalCone::from_generators(3, &gs).unwrap();
            check_triangulation(&c, 2);
        }

        #[test]
        fn unique_coset_decomposition(a in 1i64..4, b in -3i64..4, c in 1i64..4) {
            let s = SimplicialCone::new(vec![v(&[a, b]), v(&[0, c])]).unwrap();
            let lam = s.fundamental_parallelepiped();
            prop_assert_eq!(lam.len() as i64, a * c);
            for x in -6i64..=6 {
                for y in -6i64..=6 {
                    let p = v(&[x, y]);
                    if !s.contains(&p) {
                        continue;
                    }
                    let mut hits = 0;
                    for e in &lam {
                        let l = s.coordinates(&(&p - e)).unwrap();
                        if l.iter().all(|q| q.is_integer() && !q.is_negative()) {
                            hits += 1;
                        }
                    }
                    prop_assert_eq!(hits, 1);
                }
            }
        }

        #[test]
        fn chamber_interiors_have_their_support(s1 in 0i64..6, s2 in 0i64..6) {
            prop_assume!(s1 + s2 > 0);
            let s = f2();
            let w = RationalCone::from_generators(2, &[v(&[1, 3]), v(&[1, 1])]).unwrap();
            let ch = zariski_chambers(&s, &w).unwrap();
            let d = &(&v(&[1, 3]) * &rat(s1)) + &(&v(&[1, 1]) * &rat(s2));
            prop_assert!(ch.iter().any(|c| c.cone.contains(&d)));
            for c in &ch {
                if c.cone.contains_relative_interior(&d) {
                    let z = zariski_decompose(&s, &Divisor::new(d.clone())).unwrap();
                    prop_assert_eq!(&z.support, &c.gamma);
                }
            }
        }
    }
}
