//! Section-count oracles and series over cones of exponents.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::MultiPoly;
use super::quasi::ONSETS;
use super::rational::RationalSeries;
use super::{default_vars, SeriesError};
use crate::cones::{full_dimensional_chambers, RationalCone, SimplicialCone};
use crate::exact::{RatVector, Rational};
use crate::surface::{Divisor, SurfaceLattice};
use crate::zariski::{pairs_compatible, zariski_decompose, ZariskiPair};

/// `m -> h0(D + sum m_i D_i)` on integer exponent vectors.
pub trait H0Oracle {
    fn arity(&self) -> usize;
    fn h0(&self, m: &[i64]) -> Result<u64, String>;
}

/// Oracle backed by a closure.
pub struct FnOracle<F> {
    arity: usize,
    f: F,
}

impl<F: Fn(&[i64]) -> Result<u64, String>> FnOracle<F> {
    pub fn new(arity: usize, f: F) -> Self {
        FnOracle { arity, f }
    }
}

impl<F: Fn(&[i64]) -> Result<u64, String>> H0Oracle for FnOracle<F> {
    fn arity(&self) -> usize {
        self.arity
    }
    fn h0(&self, m: &[i64]) -> Result<u64, String> {
        (self.f)(m)
    }
}

/// Finite table; lookups outside it fail.
#[derive(Clone, Debug, Default)]
pub struct TableOracle {
    arity: usize,
    table: BTreeMap<Vec<i64>, u64>,
}

impl TableOracle {
    pub fn new(arity: usize, table: BTreeMap<Vec<i64>, u64>) -> Self {
        TableOracle { arity, table }
    }
}

impl H0Oracle for TableOracle {
    fn arity(&self) -> usize {
        self.arity
    }
    fn h0(&self, m: &[i64]) -> Result<u64, String> {
        self.table.get(m).copied().ok_or_else(|| format!("no table entry at {m:?}"))
    }
}

/// Pullback `m -> inner(base + sum m_j images_j)`.
pub struct AffineOracle<'a> {
    inner: &'a dyn H0Oracle,
    base: Vec<i64>,
    images: Vec<Vec<i64>>,
}

impl<'a> AffineOracle<'a> {
    pub fn new(inner: &'a dyn H0Oracle, base: Vec<i64>, images: Vec<Vec<i64>>) -> Result<Self, SeriesError> {
        let n = inner.arity();
        if let Some(v) = std::iter::once(&base).chain(&images).find(|v| v.len() != n) {
            return Err(SeriesError::Arity { expected: n, found: v.len() });
        }
        Ok(AffineOracle { inner, base, images })
    }
}

impl H0Oracle for AffineOracle<'_> {
    fn arity(&self) -> usize {
        self.images.len()
    }
    fn h0(&self, m: &[i64]) -> Result<u64, String> {
        let mut x = self.base.clone();
        for (mj, img) in m.iter().zip(&self.images) {
            for (xi, gi) in x.iter_mut().zip(img) {
                *xi += mj * gi;
            }
        }
        self.inner.h0(&x)
    }
}

/// Memoizing wrapper.
pub struct CachedOracle<'a> {
    inner: &'a dyn H0Oracle,
    cache: RefCell<HashMap<Vec<i64>, u64>>,
}

impl<'a> CachedOracle<'a> {
    pub fn new(inner: &'a dyn H0Oracle) -> Self {
        CachedOracle { inner, cache: RefCell::new(HashMap::new()) }
    }

    pub(crate) fn eval(&self, m: &[i64]) -> Result<u64, SeriesError> {
        self.h0(m).map_err(SeriesError::Oracle)
    }
}

impl H0Oracle for CachedOracle<'_> {
    fn arity(&self) -> usize {
        self.inner.arity()
    }
    fn h0(&self, m: &[i64]) -> Result<u64, String> {
        if let Some(&v) = self.cache.borrow().get(m) {
            return Ok(v);
        }
        let v = self.inner.h0(m)?;
        self.cache.borrow_mut().insert(m.to_vec(), v);
        Ok(v)
    }
}

/// Search limits for rationalizing sampled counts.
#[derive(Clone, Debug)]
pub struct SeriesOptions {
    /// Largest uniform period tried when none is supplied.
    pub max_period: u64,
    /// Largest onset tried per axis.
    pub max_onset: usize,
    /// Verification window, as a multiple of the numerator bound per axis.
    pub window_factor: usize,
    /// Largest shift tried by the chamber reduction.
    pub max_shift: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions { max_period: 4, max_onset: 8, window_factor: 3, max_shift: 64 }
    }
}

/// Numerator of `prod_j (1 - x_j^{p_j})^3 * sum_k f(k) x^k` when it has
/// degree at most `bound[j]` in each `x_j`, verified on the box
/// `[0, bound + window]`.
fn fit_box(
    f: &dyn Fn(&[i64]) -> Result<u64, SeriesError>,
    periods: &[usize],
    bound: &[usize],
    window_factor: usize,
) -> Result<Option<MultiPoly>, SeriesError> {
    let r = periods.len();
    let sides: Vec<usize> = bound.iter().map(|&k| k + window_factor * k.max(1) + 1).collect();
    let total: usize = sides.iter().product();
    let mut strides = vec![1usize; r];
    for j in (0..r.saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * sides[j + 1];
    }
    let point = |mut idx: usize| -> Vec<i64> {
        let mut k = vec![0i64; r];
        for j in 0..r {
            k[j] = (idx / strides[j]) as i64;
            idx %= strides[j];
        }
        k
    };
    let mut vals: Vec<BigInt> = Vec::with_capacity(total);
    for idx in 0..total {
        vals.push(BigInt::from(f(&point(idx))?));
    }
    for j in 0..r {
        let step = periods[j] * strides[j];
        for _ in 0..3 {
            for idx in (0..total).rev() {
                if (idx / strides[j]) % sides[j] >= periods[j] {
                    let prev = vals[idx - step].clone();
                    vals[idx] -= prev;
                }
            }
        }
    }
    let mut num = MultiPoly::zero(r);
    for (idx, v) in vals.into_iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let k = point(idx);
        if k.iter().zip(bound).any(|(&kj, &bj)| kj as usize > bj) {
            return Ok(None);
        }
        num.add_term(k, v);
    }
    Ok(Some(num))
}

fn onsets(max: usize) -> impl Iterator<Item = usize> {
    ONSETS.into_iter().filter(move |&o| o <= max)
}

/// `sum h(m) t^m` over the integer points `m` of a simplicial cone.
///
/// Each coset `E` of the fundamental parallelepiped is rationalized in the
/// generator directions over `prod (1 - t^{p_j v_j})^3`; with no `periods`
/// a uniform period up to `opts.max_period` is searched. The result is reduced.
pub fn cone_series(
    s: &SimplicialCone,
    h: &dyn H0Oracle,
    vars: &[String],
    periods: Option<&[u64]>,
    opts: &SeriesOptions,
) -> Result<RationalSeries, SeriesError> {
    let l = vars.len();
    if h.arity() != l {
        return Err(SeriesError::Arity { expected: l, found: h.arity() });
    }
    let h = CachedOracle::new(h);
    let r = s.dim();
    if r == 0 {
        let c = BigInt::from(h.eval(&vec![0; l])?);
        return RationalSeries::from_poly(vars.to_vec(), MultiPoly::constant(l, c));
    }
    if s.ambient_dim() != l {
        return Err(SeriesError::Arity { expected: l, found: s.ambient_dim() });
    }
    let gens: Vec<Vec<i64>> = s.generators().iter().map(|g| g.to_i64().expect("integral generator")).collect();
    let candidates: Vec<Vec<usize>> = match periods {
        Some(p) if p.len() != r => return Err(SeriesError::Arity { expected: r, found: p.len() }),
        Some(p) => vec![p.iter().map(|&x| x.max(1) as usize).collect()],
        None => (1..=opts.max_period.max(1) as usize).map(|p| vec![p; r]).collect(),
    };
    let mut total = RationalSeries::zero(vars.to_vec());
    for e in s.fundamental_parallelepiped() {
        let e = e.to_i64().expect("integral coset");
        let f = |k: &[i64]| -> Result<u64, SeriesError> {
            let mut m = e.clone();
            for (kj, g) in k.iter().zip(&gens) {
                for (mi, gi) in m.iter_mut().zip(g) {
                    *mi += kj * gi;
                }
            }
            h.eval(&m)
        };
        let mut found = None;
        'search: for o in onsets(opts.max_onset) {
            for p in &candidates {
                let bound: Vec<usize> = p.iter().map(|pj| 3 * pj - 1 + o).collect();
                if let Some(num) = fit_box(&f, p, &bound, opts.window_factor)? {
                    found = Some((num, p.clone()));
                    break 'search;
                }
            }
        }
        let Some((num, p)) = found else {
            return Err(SeriesError::CosetNotRationalWithinWindow(format!("{e:?}")));
        };
        let xvars: Vec<String> = (0..r).map(|j| format!("x{j}")).collect();
        let den = (0..r)
            .map(|j| {
                let mut v = vec![0i64; r];
                v[j] = p[j] as i64;
                (v, 3)
            })
            .collect();
        let piece = RationalSeries::new(xvars, num, den)?.substitute(vars.to_vec(), &gens)?.shift(&e);
        total = total.add(&piece)?;
    }
    Ok(total.reduced())
}

fn simplex_key(s: &SimplicialCone) -> Vec<RatVector> {
    let mut g = s.generators().to_vec();
    g.sort();
    g
}

/// Signed simplicial pieces whose weighted indicator functions sum to the
/// indicator of the union of `cones`; each piece is tagged with the first
/// cone it came from.
fn signed_simplices(cones: &[RationalCone]) -> Result<Vec<(SimplicialCone, i64, usize)>, SeriesError> {
    let k = cones.len();
    let mut inters: Vec<(RationalCone, i64, usize)> = Vec::new();
    for mask in 1u64..(1u64 << k) {
        let idx: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let mut c = cones[idx[0]].clone();
        for &i in &idx[1..] {
            c = c.intersect(&cones[i])?;
        }
        let sign = if idx.len() % 2 == 1 { 1 } else { -1 };
        match inters.iter_mut().find(|(x, _, _)| *x == c) {
            Some(entry) => entry.1 += sign,
            None => inters.push((c, sign, idx[0])),
        }
    }
    let mut faces: BTreeMap<Vec<RatVector>, (SimplicialCone, i64, usize)> = BTreeMap::new();
    for (c, coeff, tag) in inters {
        if coeff == 0 {
            continue;
        }
        let simplices = c.triangulate();
        if simplices.is_empty() {
            let zero = SimplicialCone::new(Vec::new())?;
            faces.entry(Vec::new()).or_insert((zero, 0, tag)).1 += coeff;
            continue;
        }
        let n = simplices.len();
        for mask in 1u64..(1u64 << n) {
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let face = idx[1..].iter().fold(simplices[idx[0]].clone(), |acc, &i| acc.common_face(&simplices[i]));
            let sign = if idx.len() % 2 == 1 { coeff } else { -coeff };
            let key = simplex_key(&face);
            faces.entry(key).or_insert((face, 0, tag)).1 += sign;
        }
    }
    Ok(faces.into_values().filter(|(_, c, _)| *c != 0).collect())
}

/// `sum h(m) t^m` over the integer points of the union of `cones`, by
/// inclusion–exclusion over intersections and their triangulations.
pub fn inclusion_exclusion(
    cones: &[RationalCone],
    h: &dyn H0Oracle,
    vars: &[String],
    opts: &SeriesOptions,
) -> Result<RationalSeries, SeriesError> {
    let l = vars.len();
    if let Some(c) = cones.iter().find(|c| c.ambient_dim() != l) {
        return Err(SeriesError::Arity { expected: l, found: c.ambient_dim() });
    }
    let cached = CachedOracle::new(h);
    let mut total = RationalSeries::zero(vars.to_vec());
    for (s, coeff, _) in signed_simplices(cones)? {
        let piece = cone_series(&s, &cached, vars, None, opts)?;
        total = total.add(&piece.scale(&BigInt::from(coeff)))?;
    }
    Ok(total.reduced())
}

/// Record of one simplicial piece of a chamber reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceReport {
    pub gamma: BTreeSet<usize>,
    pub simplex: Vec<Vec<i64>>,
    pub coefficient: i64,
    pub periods: Vec<u64>,
    /// Compatibility shift used for each parallelepiped coset.
    pub shifts: Vec<usize>,
}

/// Output of [`chamber_reduced_series`].
#[derive(Clone, Debug)]
pub struct ChamberSeries {
    pub series: RationalSeries,
    pub pieces: Vec<PieceReport>,
}

struct Reduction<'a> {
    s: &'a SurfaceLattice,
    h: CachedOracle<'a>,
    opts: &'a SeriesOptions,
    dirs: Vec<Divisor>,
    parts: Vec<ZariskiPair>,
    periods: Vec<usize>,
}

fn to_class(d: &Divisor) -> Result<Vec<i64>, SeriesError> {
    d.coords().to_i64().ok_or_else(|| SeriesError::NotIntegral(d.to_string()))
}

impl Reduction<'_> {
    fn h(&self, d: &Divisor) -> Result<u64, SeriesError> {
        self.h.eval(&to_class(d)?)
    }

    fn combo(&self, base: &Divisor, k: &[(usize, i64)]) -> Divisor {
        k.iter().fold(base.clone(), |acc, &(j, c)| &acc + &self.dirs[j].scale(&Rational::from_integer(c.into())))
    }

    /// Smallest `n` making `base + n sum_J dirs` compatible with every direction in `J`.
    fn shift(&self, base: &Divisor, js: &[usize]) -> Result<(usize, Divisor, ZariskiPair), SeriesError> {
        for n in 0..=self.opts.max_shift {
            let d = self.combo(base, &js.iter().map(|&j| (j, n as i64)).collect::<Vec<_>>());
            let Ok(z) = zariski_decompose(self.s, &d) else { continue };
            let mut all = vec![z.clone()];
            all.extend(js.iter().map(|&j| self.parts[j].clone()));
            if pairs_compatible(self.s, &all) {
                return Ok((n, d, z));
            }
        }
        Err(SeriesError::ShiftNotFound(self.opts.max_shift))
    }

    /// `sum_{k in N^J} h(base + sum k_j dirs_j) x^k` over `r` variables.
    fn region(&self, base: &Divisor, js: &[usize], r: usize, shifts: &mut Vec<usize>) -> Result<RationalSeries, SeriesError> {
        let xvars: Vec<String> = (0..r).map(|j| format!("x{j}")).collect();
        if js.is_empty() {
            let c = BigInt::from(self.h(base)?);
            return RationalSeries::from_poly(xvars, MultiPoly::constant(r, c));
        }
        let (n, dn, _) = self.shift(base, js)?;
        shifts.push(n);
        let ps: Vec<usize> = js.iter().map(|&j| self.periods[j]).collect();
        // Beyond the shift every decomposition is additive, so sections can
        // be counted on nef parts whenever the negative part is integral.
        let f = |k: &[i64]| -> Result<u64, SeriesError> {
            let neg: Vec<Rational> = (0..self.s.num_curves())
                .map(|c| js.iter().zip(k).map(|(&j, &kj)| self.parts[j].coefficient(c) * Rational::from_integer(kj.into())).sum())
                .collect();
            if neg.iter().all(Rational::is_integer) {
                let p = js.iter().zip(k).fold(dn.clone(), |acc, (&j, &kj)| {
                    &acc + &self.parts[j].positive.scale(&Rational::from_integer(kj.into()))
                });
                self.h(&p)
            } else {
                self.h(&self.combo(&dn, &js.iter().copied().zip(k.iter().copied()).collect::<Vec<_>>()))
            }
        };
        let bound: Vec<usize> = ps.iter().map(|p| 3 * p - 1).collect();
        let num = fit_box(&f, &ps, &bound, self.opts.window_factor)?
            .ok_or_else(|| SeriesError::CosetNotRationalWithinWindow(format!("shift {n}")))?;
        let images: Vec<Vec<i64>> = js
            .iter()
            .map(|&j| (0..r).map(|i| i64::from(i == j)).collect())
            .collect();
        let den = js
            .iter()
            .map(|&j| ((0..r).map(|i| if i == j { self.periods[j] as i64 } else { 0 }).collect(), 3))
            .collect();
        let mut shift_all = vec![0i64; r];
        for &j in js {
            shift_all[j] = n as i64;
        }
        let main = RationalSeries::new(xvars.clone(), num.substitute(&images, r), den)?.shift(&shift_all);
        let mut total = main;
        // Strips: coordinates in I stay below n, the rest start at n.
        let m = js.len();
        for mask in 1u64..(1u64 << m) {
            let inside: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| js[i]).collect();
            let rest: Vec<usize> = js.iter().copied().filter(|j| !inside.contains(j)).collect();
            let mut c = vec![0i64; inside.len()];
            if n == 0 {
                continue;
            }
            loop {
                let mut k: Vec<(usize, i64)> = inside.iter().copied().zip(c.iter().copied()).collect();
                k.extend(rest.iter().map(|&j| (j, n as i64)));
                let b = self.combo(base, &k);
                let mut e = vec![0i64; r];
                for &(j, kj) in &k {
                    e[j] = kj;
                }
                let sub = self.region(&b, &rest, r, shifts)?.shift(&e);
                total = total.add(&sub)?;
                let mut i = 0;
                while i < c.len() {
                    c[i] += 1;
                    if c[i] < n as i64 {
                        break;
                    }
                    c[i] = 0;
                    i += 1;
                }
                if i == c.len() {
                    break;
                }
            }
        }
        Ok(total)
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / num_integer::gcd(a, b) * b
}

fn period_of(z: &ZariskiPair) -> u64 {
    z.positive
        .coords()
        .iter()
        .chain(z.coefficients.values())
        .fold(1u64, |acc, q| lcm_u64(acc, q.denom().to_u64().expect("small denominator")))
}

/// `sum_{m in N^l} h0(D + sum m_i D_i) t^m` for big divisors `D_i`, assembled
/// from Zariski chambers of the cone they span.
///
/// `h` takes integral divisor classes in the lattice basis.
pub fn chamber_reduced_series(
    s: &SurfaceLattice,
    d: &Divisor,
    bigs: &[Divisor],
    h: &dyn H0Oracle,
    opts: &SeriesOptions,
) -> Result<ChamberSeries, SeriesError> {
    let rank = s.rank();
    if h.arity() != rank {
        return Err(SeriesError::Arity { expected: rank, found: h.arity() });
    }
    to_class(d)?;
    let l = bigs.len();
    let vars = default_vars(l);
    for b in bigs {
        to_class(b)?;
        let z = zariski_decompose(s, b).map_err(|_| SeriesError::NotBig(s.format_divisor(b)))?;
        let p2 = s.pair(&z.positive, &z.positive).map_err(crate::zariski::ZariskiError::from)?;
        if !p2.is_positive() {
            return Err(SeriesError::NotBig(s.format_divisor(b)));
        }
    }
    let w = RationalCone::from_generators(rank, &bigs.iter().map(|b| b.coords().clone()).collect::<Vec<_>>())?;
    let chambers = full_dimensional_chambers(s, &w)?;
    let phi = |f: &RatVector| -> RatVector { RatVector::new(bigs.iter().map(|b| f.dot(b.coords())).collect()) };
    let mut pulled = Vec::new();
    for ch in &chambers {
        let mut ineqs: Vec<RatVector> = ch.cone.facets().iter().map(phi).collect();
        ineqs.extend((0..l).map(|i| RatVector::unit(l, i)));
        let eqs: Vec<RatVector> = ch.cone.equations().iter().map(phi).collect();
        pulled.push(RationalCone::from_inequalities(l, &ineqs, &eqs)?);
    }
    let h = CachedOracle::new(h);
    let mut total = RationalSeries::zero(vars.clone());
    let mut pieces = Vec::new();
    for (simplex, coeff, tag) in signed_simplices(&pulled)? {
        let gamma = chambers[tag].gamma.clone();
        let gens: Vec<Vec<i64>> = simplex.generators().iter().map(|g| g.to_i64().expect("integral")).collect();
        let wrap = |e: SeriesError| SeriesError::Piece {
            gamma: format!("{{{}}}", gamma.iter().map(|&i| s.labels()[i].clone()).collect::<Vec<_>>().join(", ")),
            simplex: format!("{gens:?}"),
            source: Box::new(e),
        };
        let dirs: Vec<Divisor> = gens
            .iter()
            .map(|g| g.iter().zip(bigs).fold(Divisor::zero(rank), |acc, (&c, b)| &acc + &b.scale(&Rational::from_integer(c.into()))))
            .collect();
        let parts = dirs.iter().map(|x| zariski_decompose(s, x)).collect::<Result<Vec<_>, _>>().map_err(|e| wrap(e.into()))?;
        let periods: Vec<u64> = parts.iter().map(period_of).collect();
        let red = Reduction {
            s,
            h: CachedOracle::new(&h),
            opts,
            dirs,
            parts,
            periods: periods.iter().map(|&p| p as usize).collect(),
        };
        let r = gens.len();
        let js: Vec<usize> = (0..r).collect();
        let mut piece = RationalSeries::zero(vars.clone());
        let mut shifts = Vec::new();
        for e in simplex.fundamental_parallelepiped() {
            let e: Vec<i64> = if r == 0 { vec![0; l] } else { e.to_i64().expect("integral coset") };
            let base = e.iter().zip(bigs).fold(d.clone(), |acc, (&c, b)| &acc + &b.scale(&Rational::from_integer(c.into())));
            let mut used = Vec::new();
            let x = red.region(&base, &js, r, &mut used).map_err(wrap)?;
            shifts.push(used.first().copied().unwrap_or(0));
            let y = x.substitute(vars.clone(), &gens).map_err(wrap)?.shift(&e);
            piece = piece.add(&y)?;
        }
        total = total.add(&piece.scale(&BigInt::from(coeff)))?;
        pieces.push(PieceReport { gamma, simplex: gens, coefficient: coeff, periods, shifts });
    }
    Ok(ChamberSeries { series: total.reduced(), pieces })
}
