//! Sparse Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Sparse polynomial in `arity` variables; exponents may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: BigInt) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    pub fn monomial(exp: Vec<i64>, c: BigInt) -> Self {
        let mut p = MultiPoly::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// `1 - t^v`.
    pub fn one_minus(v: &[i64]) -> Self {
        let mut p = Self::one(v.len());
        p.add_term(v.to_vec(), -BigInt::one());
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Self {
        let mut p = MultiPoly::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(x, c)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        MultiPoly { arity: self.arity, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.arity), |acc, _| &acc * self)
    }

    /// Substitutes `x_j -> t^{images[j]}` into a polynomial over `target` variables.
    pub fn substitute(&self, images: &[Vec<i64>], target: usize) -> Self {
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut x = vec![0i64; target];
            for (ej, img) in e.iter().zip(images) {
                for (xi, gi) in x.iter_mut().zip(img) {
                    *xi += ej * gi;
                }
            }
            out.add_term(x, c.clone());
        }
        out
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&[i64]) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        MultiPoly { arity: self.arity, terms }
    }

    /// Exact quotient by `1 - t^v`, if it exists.
    pub fn div_one_minus(&self, v: &[i64]) -> Option<Self> {
        let pivot = v.iter().position(|&x| x != 0)?;
        // Group terms by the line e + Z v they lie on; along each line the
        // quotient coefficients are prefix sums, and the line total must vanish.
        let mut lines: BTreeMap<Vec<i64>, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = Integer::div_floor(&e[pivot], &v[pivot]);
            let base: Vec<i64> = e.iter().zip(v).map(|(a, b)| a - k * b).collect();
            lines.entry(base).or_default().insert(k, c.clone());
        }
        let mut q = MultiPoly::zero(self.arity);
        for (base, pts) in lines {
            let (&lo, _) = pts.first_key_value()?;
            let (&hi, _) = pts.last_key_value()?;
            let mut acc = BigInt::zero();
            for k in lo..hi {
                if let Some(c) = pts.get(&k) {
                    acc += c;
                }
                if !acc.is_zero() {
                    q.terms.insert(base.iter().zip(v).map(|(a, b)| a + k * b).collect(), acc.clone());
                }
            }
            acc += &pts[&hi];
            if !acc.is_zero() {
                return None;
            }
        }
        Some(q)
    }

    /// Total degree with respect to the grading `w`, of every term.
    pub fn degrees<'a>(&'a self, w: &'a [i64]) -> impl Iterator<Item = i64> + 'a {
        self.terms.keys().map(move |e| e.iter().zip(w).map(|(a, b)| a * b).sum())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }
}
