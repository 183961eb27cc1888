//! Quadratic quasi-polynomials and one-variable Poincaré series.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cone::{CachedOracle, H0Oracle};
use super::poly::MultiPoly;
use super::rational::RationalSeries;
use super::SeriesError;
use crate::exact::{fmt_rational, rat, solve_linear, RatMatrix, RatVector, Rational};

/// `value(n) = a(n) n^2 + b(n) n + c(n)` for `n >= onset`, with `a, b, c`
/// periodic of period `period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    onset: usize,
    coeffs: Vec<[Rational; 3]>,
}

impl QuasiPolynomial {
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn onset(&self) -> usize {
        self.onset
    }

    /// `(a, b, c)` on the residue class `n = residue mod period`.
    pub fn coefficients(&self, residue: usize) -> &[Rational; 3] {
        &self.coeffs[residue % self.period]
    }

    pub fn value(&self, n: usize) -> Rational {
        let [a, b, c] = self.coefficients(n);
        let x = rat(n as i64);
        a * &x * &x + b * &x + c
    }

    /// True when `a` and `b` do not depend on the residue.
    pub fn leading_constant(&self) -> bool {
        self.coeffs.iter().all(|t| t[0] == self.coeffs[0][0] && t[1] == self.coeffs[0][1])
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "period = {} ; onset = {}", self.period, self.onset)?;
        for (i, [a, b, c]) in self.coeffs.iter().enumerate() {
            write!(
                f,
                "\nn = {i} mod {} : a = {} ; b = {} ; c = {}",
                self.period,
                fmt_rational(a),
                fmt_rational(b),
                fmt_rational(c)
            )?;
        }
        Ok(())
    }
}

fn interpolate(pts: &[(usize, i64)]) -> [Rational; 3] {
    let rows: Vec<Vec<Rational>> = pts
        .iter()
        .map(|&(n, _)| {
            let x = rat(n as i64);
            vec![&x * &x, x, Rational::one()]
        })
        .collect();
    let m = RatMatrix::from_rows(rows).expect("3x3");
    let y = RatVector::new(pts.iter().map(|&(_, v)| rat(v)).collect());
    let s = solve_linear(&m, &y).expect("distinct nodes");
    [s[0].clone(), s[1].clone(), s[2].clone()]
}

/// Fits `values[n]` (indexed from `n = 0`) by a quadratic quasi-polynomial.
///
/// Periods are tried smallest first, then onsets smallest first. Each residue
/// class is interpolated on its first three samples past the onset and must
/// match at least three more.
pub fn quasi_poly_fit(values: &[i64], max_period: usize) -> Result<QuasiPolynomial, SeriesError> {
    let len = values.len();
    for r in 1..=max_period {
        if len < 6 * r {
            break;
        }
        'onset: for n0 in 0..=len - 6 * r {
            let mut coeffs = Vec::with_capacity(r);
            for res in 0..r {
                let first = n0 + (res + r - n0 % r) % r;
                let class: Vec<(usize, i64)> = (first..len).step_by(r).map(|n| (n, values[n])).collect();
                let fit = interpolate(&class[..3]);
                let q = QuasiPolynomial { period: 1, onset: 0, coeffs: vec![fit.clone()] };
                if class[3..].iter().any(|&(n, v)| q.value(n) != rat(v)) {
                    continue 'onset;
                }
                coeffs.push((res, fit));
            }
            coeffs.sort_by_key(|(res, _)| *res);
            return Ok(QuasiPolynomial { period: r, onset: n0, coeffs: coeffs.into_iter().map(|(_, c)| c).collect() });
        }
    }
    Err(SeriesError::NoFit)
}

pub(crate) const ONSETS: [usize; 7] = [0, 1, 2, 4, 8, 16, 32];

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Rationalizes `sum h(n) t^n` over the denominator `(1 - t)^2 (1 - t^r)`
/// (when `effective`) or `(1 - t^r)^3`, for `r` running over the divisors of
/// `r_hint`.
///
/// The numerator is `g` times the truncated series; it is accepted once its
/// coefficients past the candidate degree vanish on `window` further terms
/// (default three times the candidate degree). A candidate whose window
/// runs past the oracle's domain is skipped. The result is not reduced.
pub fn poincare_series(
    h: &dyn H0Oracle,
    effective: bool,
    r_hint: usize,
    window: Option<usize>,
) -> Result<RationalSeries, SeriesError> {
    if h.arity() != 1 {
        return Err(SeriesError::Arity { expected: 1, found: h.arity() });
    }
    let h = CachedOracle::new(h);
    let t = vec!["t".to_string()];
    let mut short: Option<SeriesError> = None;
    'period: for r in divisors(r_hint.max(1)) {
        let ri = r as i64;
        let (g, den) = if effective {
            let g = &MultiPoly::one_minus(&[1]).pow(2) * &MultiPoly::one_minus(&[ri]);
            (g, vec![(vec![1], 2), (vec![ri], 1)])
        } else {
            (MultiPoly::one_minus(&[ri]).pow(3), vec![(vec![ri], 3)])
        };
        let deg_g = if effective { r + 2 } else { 3 * r };
        for o in ONSETS {
            let k = deg_g + o;
            let w = window.unwrap_or(3 * k).max(1);
            let top = k + w;
            let mut series = MultiPoly::zero(1);
            for n in 0..=top {
                match h.eval(&[n as i64]) {
                    Ok(v) => series.add_term(vec![n as i64], BigInt::from(v)),
                    Err(e) => {
                        // Larger onsets need even more values.
                        short = Some(e);
                        continue 'period;
                    }
                }
            }
            let f = (&g * &series).filter(|e| e[0] <= top as i64);
            if f.terms().any(|(e, c)| e[0] > k as i64 && !c.is_zero()) {
                continue;
            }
            return RationalSeries::new(t, f, den);
        }
    }
    Err(short.unwrap_or(SeriesError::NotRationalWithinWindow))
}
