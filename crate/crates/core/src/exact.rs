//! Exact rational scalars, vectors and matrices.
//!
//! Everything here is exact: no floating point is ever involved. Linear
//! systems are solved by fraction-free (Bareiss) elimination on integer-scaled
//! rows, and definiteness is decided from signs of leading principal minors.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system is underdetermined (solution space of dimension {0})")]
    Underdetermined(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix data has {found} entries, expected {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, found: usize },
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-3/2"` or `"+7"`; surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Canonical text form: `"3"`, `"-3/2"`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Fixed-dimension vector of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(Vec<Rational>);

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rational::zero(); dim])
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        RatVector(entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|q| q.is_integer())
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot product of mismatched vectors");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Least common multiple of the entry denominators.
    pub fn denominator(&self) -> BigInt {
        lcm_denominators(&self.0)
    }

    /// Integer entries, or `None` when some entry is fractional or overflows.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|q| if q.is_integer() { q.to_integer().to_i64() } else { None })
            .collect()
    }

    /// Positive multiple of `self` with coprime integer entries.
    /// The zero vector is returned unchanged.
    pub fn primitive(&self) -> RatVector {
        if self.is_zero() {
            return self.clone();
        }
        let l = Rational::from_integer(self.denominator());
        let ints: Vec<BigInt> = self.0.iter().map(|q| (q * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        RatVector(ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect())
    }
}

impl From<Vec<Rational>> for RatVector {
    fn from(v: Vec<Rational>) -> Self {
        RatVector(v)
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &RatVector {
    type Output = RatVector;
    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim(), "adding mismatched vectors");
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;
    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.dim(), rhs.dim(), "subtracting mismatched vectors");
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Rational> for &RatVector {
    type Output = RatVector;
    fn mul(self, c: &Rational) -> RatVector {
        self.scale(c)
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rational(q))?;
        }
        write!(f, ")")
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
    symmetric: bool,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::BadShape { rows, cols, found: data.len() });
        }
        let mut m = RatMatrix { rows, cols, data, symmetric: false };
        m.symmetric = m.asymmetry().is_none();
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(ExactError::DimensionMismatch { expected: c, found: bad.len() });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, ExactError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn from_row_vectors(rows: &[RatVector], cols: usize) -> Result<Self, ExactError> {
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(ExactError::DimensionMismatch { expected: cols, found: bad.dim() });
        }
        Self::new(rows.len(), cols, rows.iter().flat_map(|r| r.iter().cloned()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        RatMatrix { rows: n, cols: n, data, symmetric: true }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> RatVector {
        RatVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> RatVector {
        RatVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    /// True iff the entries were verified symmetric at construction.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    fn asymmetry(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        RatMatrix { rows: self.cols, cols: self.rows, data, symmetric: self.symmetric }
    }

    pub fn mul_vec(&self, v: &RatVector) -> Result<RatVector, ExactError> {
        if v.dim() != self.cols {
            return Err(ExactError::DimensionMismatch { expected: self.cols, found: v.dim() });
        }
        Ok(RatVector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &v[j])
                })
                .collect(),
        ))
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                data.push(
                    (0..self.cols)
                        .fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j)),
                );
            }
        }
        RatMatrix::new(self.rows, other.cols, data)
    }

    /// Principal submatrix on the given index set.
    pub fn principal(&self, idx: &[usize]) -> RatMatrix {
        let data = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        let mut m = RatMatrix { rows: idx.len(), cols: idx.len(), data, symmetric: false };
        m.symmetric = m.asymmetry().is_none();
        m
    }

    /// Integer rows obtained by clearing denominators row by row, together with
    /// the product of the scale factors used.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = lcm_denominators(row);
                scale *= &l;
                let lq = Rational::from_integer(l);
                row.iter().map(|q| (q * &lq).to_integer()).collect()
            })
            .collect();
        (rows, scale)
    }

    /// Determinant of a square matrix by Bareiss elimination.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return Rational::one();
        }
        let (mut a, scale) = self.integer_rows();
        let (_, pivots, sign) = bareiss(&mut a, self.cols);
        if pivots.len() < self.rows {
            return Rational::zero();
        }
        let det = a[self.rows - 1][self.cols - 1].clone() * BigInt::from(sign);
        Rational::new(det, scale)
    }

    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss(&mut a, self.cols).1.len()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<RatVector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                RatVector(v)
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.data[row * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i != row && !m.get(i, col).is_zero() {
                    let f = m.get(i, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &f * m.get(row, j);
                        m.data[i * m.cols + j] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        m.symmetric = m.asymmetry().is_none();
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Vec::with_capacity(n * 2 * n);
        for i in 0..n {
            aug.extend(self.data[i * n..(i + 1) * n].iter().cloned());
            aug.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
        }
        let (r, pivots) = RatMatrix { rows: n, cols: 2 * n, data: aug, symmetric: false }.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let data = (0..n)
            .flat_map(|i| (n..2 * n).map(move |j| (i, j)))
            .map(|(i, j)| r.get(i, j).clone())
            .collect();
        RatMatrix::new(n, n, data).ok()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Fraction-free Gaussian elimination in place over the first `ncols`
/// columns. Returns the rank-profile rows, the pivot columns and the sign of
/// the row permutation. After the call, the entry at the last pivot of a
/// nonsingular square matrix is its determinant (up to that sign).
fn bareiss(a: &mut [Vec<BigInt>], ncols: usize) -> (usize, Vec<usize>, i64) {
    let nrows = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != row {
            a.swap(p, row);
            sign = -sign;
        }
        for i in row + 1..nrows {
            for j in col + 1..width {
                let num = &a[row][col] * &a[i][j] - &a[i][col] * &a[row][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    (row, pivots, sign)
}

/// Solves `A x = b` exactly.
///
/// Inconsistent systems report [`ExactError::NoSolution`]; consistent systems
/// with a positive-dimensional solution set report
/// [`ExactError::Underdetermined`].
pub fn solve_linear(a: &RatMatrix, b: &RatVector) -> Result<RatVector, ExactError> {
    if b.dim() != a.rows() {
        return Err(ExactError::DimensionMismatch { expected: a.rows(), found: b.dim() });
    }
    let n = a.cols();
    // Augmented integer rows [A | b], each row scaled independently.
    let mut rows: Vec<Vec<BigInt>> = (0..a.rows())
        .map(|i| {
            let mut row: Vec<Rational> = a.row(i).into_vec();
            row.push(b[i].clone());
            let l = Rational::from_integer(lcm_denominators(&row));
            row.iter().map(|q| (q * &l).to_integer()).collect()
        })
        .collect();
    let (rank, pivots, _) = bareiss(&mut rows, n);
    if rows[rank..].iter().any(|r| !r[n].is_zero()) {
        return Err(ExactError::NoSolution);
    }
    if rank < n {
        return Err(ExactError::Underdetermined(n - rank));
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..rank).rev() {
        let c = pivots[i];
        let mut acc = Rational::from_integer(rows[i][n].clone());
        for j in c + 1..n {
            acc -= Rational::from_integer(rows[i][j].clone()) * &x[j];
        }
        x[c] = acc / Rational::from_integer(rows[i][c].clone());
    }
    Ok(RatVector(x))
}

/// Leading-principal-minor test: `(-1)^k * minor_k > 0` for every `k`.
pub fn is_negative_definite(a: &RatMatrix) -> Result<bool, ExactError> {
    if let Some((row, col)) = a.asymmetry() {
        return Err(ExactError::NotSymmetric { row, col });
    }
    for k in 1..=a.rows() {
        let idx: Vec<usize> = (0..k).collect();
        let minor = a.principal(&idx).determinant();
        let signed = if k % 2 == 1 { -minor } else { minor };
        if !signed.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smith normal form `S = left * A * right` of an integer matrix, with both
/// transforms unimodular. `diag` holds the nonzero invariant factors in order;
/// each divides the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

fn identity_int(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for j in 0..m[dst].len() {
        let v = &m[src][j] * q;
        m[dst][j] -= v;
    }
}

fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let v = &row[src] * q;
        row[dst] -= v;
    }
}

fn col_swap(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

pub fn smith_normal_form(a: &[Vec<BigInt>]) -> Smith {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut s: Vec<Vec<BigInt>> = a.to_vec();
    let mut left = identity_int(m);
    let mut right = identity_int(n);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !s[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| s[i][j].abs() < s[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Smith { diag, left, right };
            };
            s.swap(t, bi);
            left.swap(t, bi);
            col_swap(&mut s, t, bj);
            col_swap(&mut right, t, bj);
            let mut dirty = false;
            for i in t + 1..m {
                let q = s[i][t].div_floor(&s[t][t]);
                row_axpy(&mut s, i, t, &q);
                row_axpy(&mut left, i, t, &q);
                dirty |= !s[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = s[t][j].div_floor(&s[t][t]);
                col_axpy(&mut s, j, t, &q);
                col_axpy(&mut right, j, t, &q);
                dirty |= !s[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[i][j].is_multiple_of(&s[t][t])));
            if let Some(i) = bad {
                let one = -BigInt::one();
                row_axpy(&mut s, t, i, &one);
                row_axpy(&mut left, t, i, &one);
                continue;
            }
            break;
        }
        if s[t][t].is_negative() {
            for v in s[t].iter_mut() {
                *v = -v.clone();
            }
            for v in left[t].iter_mut() {
                *v = -v.clone();
            }
        }
        diag.push(s[t][t].clone());
    }
    Smith { diag, left, right }
}
