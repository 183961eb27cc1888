//! Complete toric varieties from fans: section counts by lattice points,
//! fixed parts, divisor class groups and Euler–Chow series.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cones::RationalCone;
use crate::exact::{smith_normal_form, solve_linear, RatMatrix, RatVector, Rational};
use crate::series::{H0Oracle, MultiPoly, RationalSeries, SeriesError};
use crate::surface::{SurfaceError, SurfaceLattice};
use crate::zariski::FixedPartOracle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("polytope is unbounded")]
    UnboundedPolytope,
    #[error("linear series is empty")]
    EmptyLinearSeries,
    #[error("not a smooth complete surface fan: {0}")]
    NotSmoothSurface(String),
    #[error("divisor has {found} coefficients, fan has {expected} rays")]
    DivisorLength { expected: usize, found: usize },
    #[error("class has {found} coordinates, class group has rank {expected}")]
    ClassLength { expected: usize, found: usize },
    #[error("rank-one Chow group not asserted for this fan")]
    RankOneNotAsserted,
    #[error("no cones of dimension {0}")]
    NoSuchDimension(usize),
    #[error("no ray subset gives a basis of the class group")]
    NoRayBasis,
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Rays and maximal cones of a fan in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
    bounded: bool,
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, x| acc.gcd(x))
}

fn rat_rows(rows: &[Vec<i64>]) -> Vec<RatVector> {
    rows.iter().map(|r| RatVector::from_i64(r)).collect()
}

impl Fan {
    /// A complete fan; fails unless the maximal cones cover space and meet in faces.
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self, ToricError> {
        let fan = Self::partial(dim, rays, max_cones)?;
        fan.check_complete()?;
        Ok(fan)
    }

    /// A fan whose completeness is not required.
    pub fn partial(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self, ToricError> {
        if dim == 0 {
            return Err(ToricError::InvalidFan("dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(ToricError::InvalidFan(format!("rays[{i}] has length {}", r.len())));
            }
            if gcd_all(r) != 1 {
                return Err(ToricError::InvalidFan(format!("rays[{i}] is not primitive")));
            }
            if rays[..i].contains(r) {
                return Err(ToricError::InvalidFan(format!("rays[{i}] repeats an earlier ray")));
            }
        }
        for (i, c) in max_cones.iter().enumerate() {
            if let Some(&j) = c.iter().find(|&&j| j >= rays.len()) {
                return Err(ToricError::InvalidFan(format!("max_cones[{i}] refers to ray {j}")));
            }
            if c.iter().collect::<BTreeSet<_>>().len() != c.len() {
                return Err(ToricError::InvalidFan(format!("max_cones[{i}] repeats a ray")));
            }
        }
        let recession = RationalCone::from_inequalities(dim, &rat_rows(&rays), &[])
            .map_err(|e| ToricError::InvalidFan(e.to_string()))?;
        Ok(Fan { dim, rays, max_cones, bounded: recession.is_zero() })
    }

    fn cone(&self, i: usize) -> RationalCone {
        let gens: Vec<RatVector> = self.max_cones[i].iter().map(|&j| RatVector::from_i64(&self.rays[j])).collect();
        RationalCone::from_generators(self.dim, &gens).expect("cone of rays")
    }

    fn check_complete(&self) -> Result<(), ToricError> {
        let cones: Vec<RationalCone> = (0..self.max_cones.len()).map(|i| self.cone(i)).collect();
        for (i, c) in cones.iter().enumerate() {
            if c.dim() != self.dim {
                return Err(ToricError::NotComplete(format!("max_cones[{i}] is not full-dimensional")));
            }
            if !c.is_pointed() {
                return Err(ToricError::InvalidFan(format!("max_cones[{i}] contains a line")));
            }
            for &j in &self.max_cones[i] {
                if !c.rays().contains(&RatVector::from_i64(&self.rays[j])) {
                    return Err(ToricError::InvalidFan(format!("ray {j} is not extreme in max_cones[{i}]")));
                }
            }
        }
        // Cones meet in common faces.
        for i in 0..cones.len() {
            for j in i + 1..cones.len() {
                let m = cones[i].intersect(&cones[j]).map_err(|e| ToricError::InvalidFan(e.to_string()))?;
                let p = m.interior_point();
                let fi = cones[i].minimal_face(&p).expect("in cone");
                let fj = cones[j].minimal_face(&p).expect("in cone");
                if fi != m || fj != m {
                    return Err(ToricError::InvalidFan(format!("max_cones[{i}] and [{j}] overlap")));
                }
            }
        }
        // Every facet is shared by exactly two maximal cones.
        let mut facets: std::collections::BTreeMap<Vec<usize>, usize> = Default::default();
        for (i, c) in cones.iter().enumerate() {
            for f in c.facets() {
                let mut key: Vec<usize> = self.max_cones[i]
                    .iter()
                    .copied()
                    .filter(|&j| f.dot(&RatVector::from_i64(&self.rays[j])).is_zero())
                    .collect();
                key.sort();
                *facets.entry(key).or_default() += 1;
            }
        }
        if let Some((k, n)) = facets.iter().find(|(_, &n)| n != 2) {
            return Err(ToricError::NotComplete(format!("facet on rays {k:?} lies in {n} maximal cones")));
        }
        // Sample lattice points near the origin.
        let mut pt = vec![-2i64; self.dim];
        loop {
            let p = RatVector::from_i64(&pt);
            if !cones.iter().any(|c| c.contains(&p)) {
                return Err(ToricError::NotComplete(format!("{p} is not covered")));
            }
            let mut i = 0;
            while i < self.dim {
                pt[i] += 1;
                if pt[i] <= 2 {
                    break;
                }
                pt[i] = -2;
                i += 1;
            }
            if i == self.dim {
                break;
            }
        }
        if !self.bounded {
            return Err(ToricError::NotComplete("rays lie in a half-space".into()));
        }
        Ok(())
    }

    /// `P^n`: rays `e_1, ..., e_n, -(e_1 + ... + e_n)`.
    pub fn projective_space(n: usize) -> Self {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        rays.push(vec![-1; n]);
        let max_cones = (0..=n).map(|skip| (0..=n).filter(|&j| j != skip).collect()).collect();
        Fan::new(n, rays, max_cones).expect("projective space")
    }

    /// Hirzebruch surface with rays `e1, e2, -e1 + a e2, -e2`.
    pub fn hirzebruch(a: i64) -> Self {
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]];
        Fan::new(2, rays, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).expect("Hirzebruch surface")
    }

    pub fn p1xp1() -> Self {
        Self::hirzebruch(0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    /// Cones of the fan of the given dimension, as sorted ray-index sets.
    pub fn cones_of_dim(&self, k: usize) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for (i, mc) in self.max_cones.iter().enumerate() {
            let cone = self.cone(i);
            let on = |f: &RatVector, j: usize| f.dot(&RatVector::from_i64(&self.rays[j])).is_zero();
            for mask in 0u64..(1u64 << mc.len()) {
                let s: Vec<usize> = (0..mc.len()).filter(|b| mask >> b & 1 == 1).map(|b| mc[b]).collect();
                let closing: Vec<&RatVector> = cone.facets().iter().filter(|f| s.iter().all(|&j| on(f, j))).collect();
                let closure: Vec<usize> = mc.iter().copied().filter(|&j| closing.iter().all(|f| on(f, j))).collect();
                if closure.len() != s.len() {
                    continue;
                }
                let rows: Vec<RatVector> = s.iter().map(|&j| RatVector::from_i64(&self.rays[j])).collect();
                let dim = if s.is_empty() { 0 } else { RatMatrix::from_row_vectors(&rows, self.dim).expect("width").rank() };
                if dim == k {
                    let mut key = s;
                    key.sort();
                    out.insert(key);
                }
            }
        }
        out
    }
}

/// `sum a_rho D_rho` over the rays of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricDivisor {
    coeffs: Vec<Rational>,
}

impl ToricDivisor {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        ToricDivisor { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ToricDivisor { coeffs: coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ToricDivisor { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn sub(&self, other: &ToricDivisor) -> Self {
        ToricDivisor { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }
}

/// Lattice points of `{u : <u, v_rho> >= b_rho}`.
struct Polytope {
    a: Vec<Vec<i128>>,
    b: Vec<i128>,
    dim: usize,
}

fn ceil_i128(q: &Rational) -> i128 {
    q.ceil().to_integer().to_i128().expect("coefficient fits in i128")
}

impl Polytope {
    fn of(fan: &Fan, d: &ToricDivisor) -> Result<Self, ToricError> {
        if d.coeffs.len() != fan.num_rays() {
            return Err(ToricError::DivisorLength { expected: fan.num_rays(), found: d.coeffs.len() });
        }
        if !fan.bounded {
            return Err(ToricError::UnboundedPolytope);
        }
        let a = fan.rays.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let b = d.coeffs.iter().map(|c| ceil_i128(&-c)).collect();
        Ok(Polytope { a, b, dim: fan.dim })
    }

    fn feasible(&self, u: &[Rational]) -> bool {
        self.a.iter().zip(&self.b).all(|(row, &bi)| {
            let s: Rational = row.iter().zip(u).map(|(&x, y)| Rational::from_integer(BigInt::from(x)) * y).sum();
            s >= Rational::from_integer(BigInt::from(bi))
        })
    }

    /// Integer box around the vertices, or `None` when empty.
    fn bounding_box(&self) -> Option<Vec<(i128, i128)>> {
        let n = self.a.len();
        let d = self.dim;
        let mut lo: Vec<Option<Rational>> = vec![None; d];
        let mut hi: Vec<Option<Rational>> = vec![None; d];
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let rows: Vec<Vec<Rational>> = idx
                .iter()
                .map(|&i| self.a[i].iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
                .collect();
            let m = RatMatrix::from_rows(rows).expect("square");
            let rhs = RatVector::new(idx.iter().map(|&i| Rational::from_integer(BigInt::from(self.b[i]))).collect());
            if let Ok(u) = solve_linear(&m, &rhs) {
                if self.feasible(u.as_slice()) {
                    for (k, x) in u.iter().enumerate() {
                        if lo[k].as_ref().is_none_or(|l| x < l) {
                            lo[k] = Some(x.clone());
                        }
                        if hi[k].as_ref().is_none_or(|h| x > h) {
                            hi[k] = Some(x.clone());
                        }
                    }
                }
            }
            // Next d-subset in lexicographic order.
            let mut i = d;
            while i > 0 && idx[i - 1] == n - d + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..d {
                idx[j] = idx[j - 1] + 1;
            }
        }
        lo.into_iter()
            .zip(hi)
            .map(|(l, h)| Some((l?.ceil().to_integer().to_i128()?, h?.floor().to_integer().to_i128()?)))
            .collect()
    }

    /// Calls `visit(prefix, lo, hi)` for every integer prefix of the first
    /// `dim - 1` coordinates whose fibre in the last coordinate is `[lo, hi]`.
    fn scan(&self, mut visit: impl FnMut(&[i128], i128, i128)) {
        let Some(bx) = self.bounding_box() else { return };
        let d = self.dim;
        let last = d - 1;
        let mut pre: Vec<i128> = bx[..last].iter().map(|&(l, _)| l).collect();
        if bx[..last].iter().any(|&(l, h)| l > h) {
            return;
        }
        loop {
            let (mut lo, mut hi) = bx[last];
            let mut ok = true;
            for (row, &bi) in self.a.iter().zip(&self.b) {
                let rest: i128 = row[..last].iter().zip(&pre).map(|(x, y)| x * y).sum();
                let need = bi - rest;
                let c = row[last];
                match c.cmp(&0) {
                    std::cmp::Ordering::Greater => lo = lo.max(Integer::div_ceil(&need, &c)),
                    std::cmp::Ordering::Less => hi = hi.min(Integer::div_floor(&need, &c)),
                    std::cmp::Ordering::Equal => ok &= need <= 0,
                }
            }
            if ok && lo <= hi {
                visit(&pre, lo, hi);
            }
            let mut i = 0;
            while i < last {
                pre[i] += 1;
                if pre[i] <= bx[i].1 {
                    break;
                }
                pre[i] = bx[i].0;
                i += 1;
            }
            if i == last {
                break;
            }
        }
    }
}

/// Number of lattice points of the polytope of `d`.
pub fn h0_toric(fan: &Fan, d: &ToricDivisor) -> Result<u64, ToricError> {
    let p = Polytope::of(fan, d)?;
    let mut n: u64 = 0;
    p.scan(|_, lo, hi| n += (hi - lo + 1) as u64);
    Ok(n)
}

/// Fixed part of `|d|`: at each ray, the least order of vanishing of a section.
pub fn fixed_part_toric(fan: &Fan, d: &ToricDivisor) -> Result<ToricDivisor, ToricError> {
    let p = Polytope::of(fan, d)?;
    let last = fan.dim - 1;
    let mut mins: Vec<Option<i128>> = vec![None; fan.num_rays()];
    p.scan(|pre, lo, hi| {
        for (k, row) in p.a.iter().enumerate() {
            let rest: i128 = row[..last].iter().zip(pre).map(|(x, y)| x * y).sum();
            let v = rest + row[last] * if row[last] >= 0 { lo } else { hi };
            if mins[k].is_none_or(|m| v < m) {
                mins[k] = Some(v);
            }
        }
    });
    let coeffs = mins
        .into_iter()
        .zip(&d.coeffs)
        .map(|(m, a)| m.map(|m| Rational::from_integer(BigInt::from(m)) + a))
        .collect::<Option<Vec<_>>>()
        .ok_or(ToricError::EmptyLinearSeries)?;
    Ok(ToricDivisor { coeffs })
}

/// `Z^{rays}` modulo principal divisors, with a basis of ray classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClassGroup {
    rank: usize,
    torsion: Vec<BigInt>,
    basis: Vec<usize>,
    /// Class of each ray divisor in basis coordinates.
    classes: Vec<Vec<i64>>,
}

fn det_i64(m: &[Vec<i64>]) -> BigInt {
    let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    RatMatrix::from_i64_rows(&rows).expect("square").determinant().to_integer()
}

pub fn divisor_class_group(fan: &Fan) -> Result<DivisorClassGroup, ToricError> {
    let n = fan.num_rays();
    let m: Vec<Vec<BigInt>> = fan.rays.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let smith = smith_normal_form(&m);
    let k = smith.diag.len();
    let torsion: Vec<BigInt> = smith.diag.iter().filter(|x| !x.is_one()).cloned().collect();
    let rank = n - k;
    // Free coordinates of the class of e_rho: rows k.. of the left transform.
    let free: Vec<Vec<i64>> = (0..n)
        .map(|rho| (k..n).map(|i| smith.left[i][rho].to_i64().expect("small transform")).collect())
        .collect();
    let mut idx: Vec<usize> = (n - rank..n).collect();
    let basis = loop {
        let t: Vec<Vec<i64>> = (0..rank).map(|i| idx.iter().map(|&b| free[b][i]).collect()).collect();
        if rank == 0 || det_i64(&t).abs().is_one() {
            break idx.clone();
        }
        // Previous subset in lexicographic order.
        let mut i = rank;
        loop {
            if i == 0 {
                return Err(ToricError::NoRayBasis);
            }
            i -= 1;
            let floor = if i == 0 { 0 } else { idx[i - 1] + 1 };
            if idx[i] > floor {
                idx[i] -= 1;
                for j in i + 1..rank {
                    idx[j] = n - rank + j;
                }
                break;
            }
        }
    };
    let t = RatMatrix::from_rows(
        (0..rank).map(|i| basis.iter().map(|&b| Rational::from_integer(free[b][i].into())).collect()).collect(),
    )
    .expect("square");
    let classes = (0..n)
        .map(|rho| {
            let y = RatVector::new(free[rho].iter().map(|&x| Rational::from_integer(x.into())).collect());
            let c = if rank == 0 { RatVector::zeros(0) } else { solve_linear(&t, &y).expect("unimodular basis") };
            c.to_i64().expect("integral class")
        })
        .collect();
    Ok(DivisorClassGroup { rank, torsion, basis, classes })
}

impl DivisorClassGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Ray indices whose classes form the basis.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn ray_class(&self, rho: usize) -> &[i64] {
        &self.classes[rho]
    }

    /// Series variable names: `t` in rank one, else `t<ray number>`.
    pub fn var_names(&self) -> Vec<String> {
        if self.rank == 1 {
            vec!["t".into()]
        } else {
            self.basis.iter().map(|b| format!("t{}", b + 1)).collect()
        }
    }

    /// Basis names `D<ray number>`.
    pub fn basis_names(&self) -> Vec<String> {
        self.basis.iter().map(|b| format!("D{}", b + 1)).collect()
    }

    pub fn class_of(&self, d: &ToricDivisor) -> Result<Vec<Rational>, ToricError> {
        if d.coeffs.len() != self.classes.len() {
            return Err(ToricError::DivisorLength { expected: self.classes.len(), found: d.coeffs.len() });
        }
        Ok((0..self.rank)
            .map(|i| d.coeffs.iter().zip(&self.classes).map(|(a, c)| a * Rational::from_integer(c[i].into())).sum())
            .collect())
    }

    /// The divisor `sum c_i D_{basis_i}`.
    pub fn representative(&self, class: &[i64]) -> Result<ToricDivisor, ToricError> {
        if class.len() != self.rank {
            return Err(ToricError::ClassLength { expected: self.rank, found: class.len() });
        }
        let mut coeffs = vec![0i64; self.classes.len()];
        for (&b, &c) in self.basis.iter().zip(class) {
            coeffs[b] = c;
        }
        Ok(ToricDivisor::from_i64(&coeffs))
    }
}

fn one_over(t: &str, power: u32) -> RationalSeries {
    RationalSeries::new(vec![t.into()], MultiPoly::one(1), vec![(vec![1], power)]).expect("valid series")
}

/// `prod_rho 1 / (1 - t^{[D_rho]})` over the class group basis.
pub fn euler_chow_divisors(fan: &Fan) -> Result<RationalSeries, ToricError> {
    let g = divisor_class_group(fan)?;
    let vs: Vec<Vec<i64>> = (0..fan.num_rays()).map(|r| g.ray_class(r).to_vec()).collect();
    Ok(RationalSeries::geometric_product(g.var_names(), &vs)?)
}

/// `(1 / (1 - t))^{#maximal cones}`.
pub fn euler_chow_points(fan: &Fan) -> RationalSeries {
    one_over("t", fan.max_cones.len() as u32)
}

/// `1 / (1 - t)`.
pub fn euler_chow_top(_fan: &Fan) -> RationalSeries {
    one_over("t", 1)
}

/// `(1 / (1 - t))^{#cones of dimension dim - p}`, valid when every orbit
/// closure of dimension `p` has the same class in a rank-one Chow group.
pub fn euler_chow_rank_one(fan: &Fan, p: usize, asserted: bool) -> Result<RationalSeries, ToricError> {
    if !asserted {
        return Err(ToricError::RankOneNotAsserted);
    }
    if p > fan.dim {
        return Err(ToricError::NoSuchDimension(p));
    }
    let count = fan.cones_of_dim(fan.dim - p).len();
    Ok(one_over("t", count as u32))
}

fn half_plane(v: &[i64]) -> u8 {
    u8::from(!(v[1] > 0 || (v[1] == 0 && v[0] > 0)))
}

fn cross(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Intersection lattice of a smooth complete toric surface; the curve
/// catalogue is the set of ray divisor classes.
pub fn surface_lattice_from_fan(fan: &Fan) -> Result<SurfaceLattice, ToricError> {
    let bad = |m: String| ToricError::NotSmoothSurface(m);
    if fan.dim != 2 {
        return Err(bad(format!("dimension {}", fan.dim)));
    }
    let n = fan.num_rays();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (&fan.rays[i], &fan.rays[j]);
        half_plane(a).cmp(&half_plane(b)).then_with(|| 0.cmp(&cross(a, b)))
    });
    let mut expected: BTreeSet<Vec<usize>> = BTreeSet::new();
    for k in 0..n {
        let (i, j) = (order[k], order[(k + 1) % n]);
        if cross(&fan.rays[i], &fan.rays[j]) != 1 {
            return Err(bad(format!("rays {} and {} do not span a unimodular cone", i + 1, j + 1)));
        }
        let mut c = vec![i, j];
        c.sort();
        expected.insert(c);
    }
    let given: BTreeSet<Vec<usize>> = fan
        .max_cones
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort();
            c
        })
        .collect();
    if given != expected {
        return Err(bad("maximal cones are not the cyclically adjacent ray pairs".into()));
    }
    let mut inter = vec![vec![0i64; n]; n];
    for k in 0..n {
        let (p, i, q) = (order[(k + n - 1) % n], order[k], order[(k + 1) % n]);
        let s: Vec<i64> = (0..2).map(|t| fan.rays[p][t] + fan.rays[q][t]).collect();
        let v = &fan.rays[i];
        let t = if v[0] != 0 { 0 } else { 1 };
        let c = s[t] / v[t];
        if s[0] != c * v[0] || s[1] != c * v[1] {
            return Err(bad("wall relation fails".into()));
        }
        inter[i][i] = -c;
        if p != i {
            inter[i][p] = 1;
            inter[p][i] = 1;
        }
        if q != i {
            inter[i][q] = 1;
            inter[q][i] = 1;
        }
    }
    let g = divisor_class_group(fan)?;
    let form: Vec<Vec<i64>> = g.basis.iter().map(|&a| g.basis.iter().map(|&b| inter[a][b]).collect()).collect();
    let rows: Vec<&[i64]> = form.iter().map(Vec::as_slice).collect();
    let form = RatMatrix::from_i64_rows(&rows).map_err(SurfaceError::from)?;
    let mut curves: Vec<(String, RatVector)> = Vec::new();
    for rho in 0..n {
        let c = RatVector::from_i64(g.ray_class(rho));
        if !curves.iter().any(|(_, x)| *x == c) {
            curves.push((format!("D{}", rho + 1), c));
        }
    }
    Ok(SurfaceLattice::new(g.basis_names(), form, curves)?)
}

/// `h0` of the divisor with class coordinates `m` in the class group basis.
pub struct ToricClassOracle<'a> {
    fan: &'a Fan,
    group: DivisorClassGroup,
}

impl<'a> ToricClassOracle<'a> {
    pub fn new(fan: &'a Fan) -> Result<Self, ToricError> {
        Ok(ToricClassOracle { fan, group: divisor_class_group(fan)? })
    }

    pub fn group(&self) -> &DivisorClassGroup {
        &self.group
    }
}

impl H0Oracle for ToricClassOracle<'_> {
    fn arity(&self) -> usize {
        self.group.rank
    }
    fn h0(&self, m: &[i64]) -> Result<u64, String> {
        let d = self.group.representative(m).map_err(|e| e.to_string())?;
        h0_toric(self.fan, &d).map_err(|e| e.to_string())
    }
}

/// Fixed parts over ray coordinates.
pub struct ToricFixedPart<'a> {
    pub fan: &'a Fan,
}

impl FixedPartOracle for ToricFixedPart<'_> {
    fn fixed_part(&self, d: &RatVector) -> Result<RatVector, String> {
        let f = fixed_part_toric(self.fan, &ToricDivisor::new(d.as_slice().to_vec())).map_err(|e| e.to_string())?;
        Ok(RatVector::new(f.coeffs))
    }
}
