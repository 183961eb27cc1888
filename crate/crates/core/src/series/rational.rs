//! Rational functions `f / prod (1 - t^v)^m` and their canonical string form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::MultiPoly;
use super::SeriesError;

/// `numerator / prod (1 - t^v)^m` over named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    vars: Vec<String>,
    numerator: MultiPoly,
    denominator: Vec<(Vec<i64>, u32)>,
}

impl RationalSeries {
    pub fn new(
        vars: Vec<String>,
        numerator: MultiPoly,
        denominator: Vec<(Vec<i64>, u32)>,
    ) -> Result<Self, SeriesError> {
        let l = vars.len();
        if numerator.arity() != l {
            return Err(SeriesError::Arity { expected: l, found: numerator.arity() });
        }
        for (v, _) in &denominator {
            if v.len() != l {
                return Err(SeriesError::Arity { expected: l, found: v.len() });
            }
            if v.iter().all(|&x| x == 0) {
                return Err(SeriesError::ZeroDenominatorExponent);
            }
        }
        let mut s = RationalSeries { vars, numerator, denominator };
        s.canonicalize();
        Ok(s)
    }

    pub fn zero(vars: Vec<String>) -> Self {
        let l = vars.len();
        RationalSeries { vars, numerator: MultiPoly::zero(l), denominator: Vec::new() }
    }

    pub fn from_poly(vars: Vec<String>, p: MultiPoly) -> Result<Self, SeriesError> {
        Self::new(vars, p, Vec::new())
    }

    /// `prod 1 / (1 - t^v)` over the given exponent vectors.
    pub fn geometric_product(vars: Vec<String>, vs: &[Vec<i64>]) -> Result<Self, SeriesError> {
        let l = vars.len();
        Self::new(vars, MultiPoly::one(l), vs.iter().map(|v| (v.clone(), 1)).collect())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[(Vec<i64>, u32)] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when some denominator exponent has a negative entry.
    pub fn is_laurent(&self) -> bool {
        self.denominator.iter().any(|(v, _)| v.iter().any(|&x| x < 0))
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return;
        }
        let mut merged: BTreeMap<Vec<i64>, u32> = BTreeMap::new();
        for (v, m) in self.denominator.drain(..) {
            *merged.entry(v).or_default() += m;
        }
        self.denominator = merged.into_iter().rev().filter(|(_, m)| *m > 0).collect();
    }

    fn denominator_poly(&self, extra: &BTreeMap<Vec<i64>, u32>) -> MultiPoly {
        let l = self.vars.len();
        extra.iter().fold(MultiPoly::one(l), |acc, (v, m)| &acc * &MultiPoly::one_minus(v).pow(*m))
    }

    fn check_vars(&self, other: &RationalSeries) -> Result<(), SeriesError> {
        if self.vars != other.vars {
            return Err(SeriesError::VariableMismatch(self.vars.join(","), other.vars.join(",")));
        }
        Ok(())
    }

    /// Numerators of `self` and `other` over their least common product
    /// denominator, followed by that denominator.
    fn over_common(&self, other: &RationalSeries) -> (MultiPoly, MultiPoly, Vec<(Vec<i64>, u32)>) {
        let a: BTreeMap<Vec<i64>, u32> = self.denominator.iter().cloned().collect();
        let b: BTreeMap<Vec<i64>, u32> = other.denominator.iter().cloned().collect();
        let mut common = a.clone();
        for (v, m) in &b {
            let e = common.entry(v.clone()).or_default();
            *e = (*e).max(*m);
        }
        let missing = |have: &BTreeMap<Vec<i64>, u32>| -> BTreeMap<Vec<i64>, u32> {
            common.iter().map(|(v, m)| (v.clone(), m - have.get(v).copied().unwrap_or(0))).collect()
        };
        let na = &self.numerator * &self.denominator_poly(&missing(&a));
        let nb = &other.numerator * &other.denominator_poly(&missing(&b));
        (na, nb, common.into_iter().collect())
    }

    pub fn add(&self, other: &RationalSeries) -> Result<RationalSeries, SeriesError> {
        self.check_vars(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let (na, nb, den) = self.over_common(other);
        Self::new(self.vars.clone(), &na + &nb, den)
    }

    pub fn scale(&self, c: &BigInt) -> RationalSeries {
        let mut s = self.clone();
        s.numerator = s.numerator.scale(c);
        s.canonicalize();
        s
    }

    /// Multiplies by the monomial `t^e`.
    pub fn shift(&self, e: &[i64]) -> RationalSeries {
        let mut s = self.clone();
        s.numerator = s.numerator.shift(e);
        s
    }

    /// Substitutes `x_j -> t^{images[j]}` into a series over `vars`.
    pub fn substitute(&self, vars: Vec<String>, images: &[Vec<i64>]) -> Result<RationalSeries, SeriesError> {
        if images.len() != self.vars.len() {
            return Err(SeriesError::Arity { expected: self.vars.len(), found: images.len() });
        }
        let l = vars.len();
        let num = self.numerator.substitute(images, l);
        let den = self
            .denominator
            .iter()
            .map(|(v, m)| {
                let mut x = vec![0i64; l];
                for (vj, img) in v.iter().zip(images) {
                    for (xi, gi) in x.iter_mut().zip(img) {
                        *xi += vj * gi;
                    }
                }
                (x, *m)
            })
            .collect();
        Self::new(vars, num, den)
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        self.vars == other.vars && {
            let (na, nb, _) = self.over_common(other);
            na == nb
        }
    }

    /// Cancels denominator factors against the numerator where exact.
    pub fn reduced(&self) -> RationalSeries {
        let mut num = self.numerator.clone();
        let mut den: BTreeMap<Vec<i64>, u32> = self.denominator.iter().cloned().collect();
        loop {
            let mut changed = false;
            let keys: Vec<Vec<i64>> = den.keys().cloned().collect();
            for v in keys {
                while den[&v] > 0 {
                    match num.div_one_minus(&v) {
                        Some(q) => {
                            num = q;
                            *den.get_mut(&v).unwrap() -= 1;
                            changed = true;
                        }
                        None => break,
                    }
                }
                if den[&v] == 0 {
                    den.remove(&v);
                    continue;
                }
                // (1 - t^{kw}) = (1 - t^{jw}) * cyclotomic part: keep only the
                // smaller factor when the numerator absorbs the rest.
                let g = v.iter().fold(0i64, |acc, x| acc.gcd(x));
                for j in (1..g).filter(|j| g % j == 0) {
                    let small: Vec<i64> = v.iter().map(|x| x / g * j).collect();
                    if let Some(q) = (&num * &MultiPoly::one_minus(&small)).div_one_minus(&v) {
                        num = q;
                        *den.get_mut(&v).unwrap() -= 1;
                        *den.entry(small).or_default() += 1;
                        changed = true;
                        break;
                    }
                }
                if den.get(&v) == Some(&0) {
                    den.remove(&v);
                }
            }
            if !changed {
                break;
            }
        }
        let mut s = RationalSeries { vars: self.vars.clone(), numerator: num, denominator: den.into_iter().collect() };
        s.canonicalize();
        s
    }

    /// Power-series coefficients of every exponent `e` with `w . e <= bound`,
    /// where `w` defaults to the all-ones grading. Zero coefficients are omitted.
    pub fn expand(&self, bound: i64, grading: Option<&[i64]>) -> Result<BTreeMap<Vec<i64>, BigInt>, SeriesError> {
        let ones = vec![1i64; self.vars.len()];
        let w = grading.unwrap_or(&ones);
        if w.len() != self.vars.len() {
            return Err(SeriesError::Arity { expected: self.vars.len(), found: w.len() });
        }
        let deg = |e: &[i64]| -> i64 { e.iter().zip(w).map(|(a, b)| a * b).sum() };
        for (v, _) in &self.denominator {
            if deg(v) <= 0 {
                return Err(SeriesError::NeedsGrading(fmt_monomial(&self.vars, v)));
            }
        }
        let mut cur: BTreeMap<Vec<i64>, BigInt> =
            self.numerator.terms().filter(|(e, _)| deg(e) <= bound).map(|(e, c)| (e.clone(), c.clone())).collect();
        for (v, m) in &self.denominator {
            let dv = deg(v);
            for _ in 0..*m {
                let mut next: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
                for (e, c) in &cur {
                    let mut x = e.clone();
                    let mut d = deg(e);
                    while d <= bound {
                        *next.entry(x.clone()).or_default() += c;
                        for (xi, vi) in x.iter_mut().zip(v) {
                            *xi += vi;
                        }
                        d += dv;
                    }
                }
                cur = next;
            }
        }
        cur.retain(|_, c| !c.is_zero());
        Ok(cur)
    }

    /// Coefficients `0..=bound` of a one-variable series.
    pub fn expand_univariate(&self, bound: usize) -> Result<Vec<BigInt>, SeriesError> {
        if self.vars.len() != 1 {
            return Err(SeriesError::Arity { expected: 1, found: self.vars.len() });
        }
        let table = self.expand(bound as i64, None)?;
        Ok((0..=bound as i64).map(|n| table.get(&vec![n]).cloned().unwrap_or_default()).collect())
    }

    /// Parses the canonical string form over the given variables; when `vars`
    /// is `None` they are the identifiers that occur, in natural order.
    pub fn parse(s: &str, vars: Option<&[String]>) -> Result<RationalSeries, SeriesError> {
        parse::parse_series(s, vars)
    }
}

/// Graded order on numerator terms: total degree ascending, then exponent
/// vectors descending.
fn term_order(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

pub(crate) fn fmt_monomial(vars: &[String], e: &[i64]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &k)| k != 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn fmt_numerator(vars: &[String], p: &MultiPoly) -> String {
    let mut terms: Vec<(&Vec<i64>, &BigInt)> = p.terms().collect();
    terms.sort_by(|a, b| term_order(a.0, b.0));
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        let constant = e.iter().all(|&k| k == 0);
        let body = if constant {
            abs.to_string()
        } else if abs.is_one() {
            fmt_monomial(vars, e)
        } else {
            format!("{abs}*{}", fmt_monomial(vars, e))
        };
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if terms.len() > 1 {
        format!("({out})")
    } else {
        out
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", fmt_numerator(&self.vars, &self.numerator))?;
        if self.denominator.is_empty() {
            return Ok(());
        }
        write!(f, " / ")?;
        for (i, (v, m)) in self.denominator.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "(1 - {})", fmt_monomial(&self.vars, v))?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

mod parse {
    use super::*;

    #[derive(Clone, Debug, PartialEq)]
    enum Tok {
        Int(BigInt),
        Ident(String),
        Sym(char),
    }

    fn lex(s: &str) -> Result<Vec<Tok>, SeriesError> {
        let cs: Vec<char> = s.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < cs.len() {
            let c = cs[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let t: String = cs[st..i].iter().collect();
                out.push(Tok::Int(t.parse().expect("digits")));
            } else if c.is_alphabetic() || c == '_' {
                let st = i;
                while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(cs[st..i].iter().collect()));
            } else if "+-*/^()".contains(c) {
                out.push(Tok::Sym(c));
                i += 1;
            } else {
                return Err(SeriesError::Parse(format!("unexpected character '{c}'")));
            }
        }
        Ok(out)
    }

    type Mono = BTreeMap<String, i64>;

    struct P {
        toks: Vec<Tok>,
        pos: usize,
    }

    impl P {
        fn peek(&self) -> Option<&Tok> {
            self.toks.get(self.pos)
        }
        fn eat(&mut self, c: char) -> bool {
            if self.peek() == Some(&Tok::Sym(c)) {
                self.pos += 1;
                true
            } else {
                false
            }
        }
        fn expect(&mut self, c: char) -> Result<(), SeriesError> {
            if self.eat(c) {
                Ok(())
            } else {
                Err(SeriesError::Parse(format!("expected '{c}' at token {}", self.pos)))
            }
        }
        fn int(&mut self) -> Result<BigInt, SeriesError> {
            let neg = self.eat('-');
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    Ok(if neg { -n } else { n })
                }
                _ => Err(SeriesError::Parse(format!("expected integer at token {}", self.pos))),
            }
        }
        fn small(&mut self) -> Result<i64, SeriesError> {
            let n = self.int()?;
            i64::try_from(n).map_err(|_| SeriesError::Parse("exponent out of range".into()))
        }
        /// Product of integers and powers.
        fn term(&mut self) -> Result<(BigInt, Mono), SeriesError> {
            let mut c = BigInt::one();
            let mut m = Mono::new();
            loop {
                match self.toks.get(self.pos).cloned() {
                    Some(Tok::Int(n)) => {
                        self.pos += 1;
                        c *= n;
                    }
                    Some(Tok::Ident(v)) => {
                        self.pos += 1;
                        let k = if self.eat('^') { self.small()? } else { 1 };
                        *m.entry(v).or_default() += k;
                    }
                    _ => return Err(SeriesError::Parse(format!("expected term at token {}", self.pos))),
                }
                if !self.eat('*') {
                    return Ok((c, m));
                }
                if matches!(self.peek(), Some(Tok::Sym('('))) {
                    self.pos -= 1;
                    return Ok((c, m));
                }
            }
        }
        fn poly(&mut self) -> Result<Vec<(BigInt, Mono)>, SeriesError> {
            let mut out = Vec::new();
            let mut neg = self.eat('-');
            loop {
                let (c, m) = self.term()?;
                out.push((if neg { -c } else { c }, m));
                if self.eat('+') {
                    neg = false;
                } else if self.eat('-') {
                    neg = true;
                } else {
                    return Ok(out);
                }
            }
        }
        fn factor(&mut self) -> Result<(Mono, u32), SeriesError> {
            self.expect('(')?;
            match self.int()? {
                n if n.is_one() => {}
                _ => return Err(SeriesError::Parse("denominator factors have the form (1 - t^v)".into())),
            }
            self.expect('-')?;
            let (c, m) = self.term()?;
            if !c.is_one() || m.is_empty() {
                return Err(SeriesError::Parse("denominator factors have the form (1 - t^v)".into()));
            }
            self.expect(')')?;
            let k = if self.eat('^') { self.small()? } else { 1 };
            let k = u32::try_from(k).map_err(|_| SeriesError::Parse("negative multiplicity".into()))?;
            Ok((m, k))
        }
    }

    fn natural_key(s: &str) -> (String, u64, String) {
        let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, tail) = s.split_at(split);
        (head.to_string(), tail.parse().unwrap_or(0), s.to_string())
    }

    pub(super) fn parse_series(s: &str, vars: Option<&[String]>) -> Result<RationalSeries, SeriesError> {
        let mut p = P { toks: lex(s)?, pos: 0 };
        let num = if p.eat('(') {
            let q = p.poly()?;
            p.expect(')')?;
            q
        } else {
            p.poly()?
        };
        let mut den = Vec::new();
        if p.eat('/') {
            loop {
                den.push(p.factor()?);
                if !p.eat('*') {
                    break;
                }
            }
        }
        if p.pos != p.toks.len() {
            return Err(SeriesError::Parse(format!("trailing input at token {}", p.pos)));
        }
        let vars: Vec<String> = match vars {
            Some(v) => v.to_vec(),
            None => {
                let mut names: Vec<String> = num
                    .iter()
                    .flat_map(|(_, m)| m.keys())
                    .chain(den.iter().flat_map(|(m, _)| m.keys()))
                    .cloned()
                    .collect();
                names.sort_by_key(|n| natural_key(n));
                names.dedup();
                names
            }
        };
        let exp = |m: &Mono| -> Result<Vec<i64>, SeriesError> {
            let mut e = vec![0i64; vars.len()];
            for (name, k) in m {
                let i = vars.iter().position(|v| v == name).ok_or_else(|| SeriesError::UnknownVariable(name.clone()))?;
                e[i] += k;
            }
            Ok(e)
        };
        let mut poly = MultiPoly::zero(vars.len());
        for (c, m) in &num {
            poly.add_term(exp(m)?, c.clone());
        }
        let den = den.iter().map(|(m, k)| Ok((exp(m)?, *k))).collect::<Result<Vec<_>, SeriesError>>()?;
        RationalSeries::new(vars, poly, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn t() -> Vec<String> {
        names(&["t"])
    }

    #[test]
    fn canonical_strings() {
        let s = RationalSeries::new(t(), MultiPoly::one(1), vec![(vec![1], 3)]).unwrap();
        assert_eq!(s.to_string(), "1 / (1 - t)^3");
        let s = RationalSeries::new(t(), MultiPoly::one_minus(&[1]).pow(2), vec![(vec![1], 3)]).unwrap();
        assert_eq!(s.to_string(), "(1 - 2*t + t^2) / (1 - t)^3");
        let h = RationalSeries::geometric_product(
            names(&["t3", "t4"]),
            &[vec![1, 0], vec![0, 1], vec![1, 0], vec![-2, 1]],
        )
        .unwrap();
        assert_eq!(h.to_string(), "1 / (1 - t3)^2 * (1 - t4) * (1 - t3^-2*t4)");
        assert_eq!(RationalSeries::zero(t()).to_string(), "0");
        let s = RationalSeries::from_poly(t(), MultiPoly::monomial(vec![2], BigInt::from(-3))).unwrap();
        assert_eq!(s.to_string(), "-3*t^2");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "1 / (1 - t)^3",
            "(1 - 2*t + t^2) / (1 - t)^3",
            "0",
            "-3*t^2",
            "(1 + x*y) / (1 - x*y^2) * (1 - x)",
            "1 / (1 - t3)^2 * (1 - t4) * (1 - t3^-2*t4)",
        ] {
            let r = RationalSeries::parse(s, None).unwrap();
            assert_eq!(r.to_string(), s);
        }
        let r = RationalSeries::parse("1/((1-t))", None);
        assert!(r.is_err());
        assert!(RationalSeries::parse("1 / (2 - t)", None).is_err());
        assert!(matches!(
            RationalSeries::parse("1 / (1 - u)", Some(&t())),
            Err(SeriesError::UnknownVariable(_))
        ));
    }

    #[test]
    fn expansion_examples() {
        let s = RationalSeries::parse("1 / (1 - t)", None).unwrap();
        let ones: Vec<BigInt> = vec![1, 1, 1, 1].into_iter().map(BigInt::from).collect();
        assert_eq!(s.expand_univariate(3).unwrap(), ones);
        let s = RationalSeries::parse("1 / (1 - t)^3", None).unwrap();
        let c: Vec<BigInt> = vec![1, 3, 6, 10, 15].into_iter().map(BigInt::from).collect();
        assert_eq!(s.expand_univariate(4).unwrap(), c);
    }

    #[test]
    fn expansion_matches_cone_indicator() {
        let s = RationalSeries::parse("(1 + x*y) / (1 - x*y^2) * (1 - x)", None).unwrap();
        let table = s.expand(3, None).unwrap();
        for a in 0..=3i64 {
            for b in 0..=3 - a {
                // Lattice points of cone{(1,0),(1,2)}: 0 <= b <= 2a.
                let want = if b <= 2 * a { 1 } else { 0 };
                assert_eq!(table.get(&vec![a, b]).cloned().unwrap_or_default(), BigInt::from(want), "({a},{b})");
            }
        }
    }

    #[test]
    fn laurent_series_need_a_grading() {
        let h = RationalSeries::parse("1 / (1 - t3)^2 * (1 - t4) * (1 - t3^-2*t4)", None).unwrap();
        assert!(h.is_laurent());
        assert!(matches!(h.expand(3, None), Err(SeriesError::NeedsGrading(_))));
        let table = h.expand(6, Some(&[1, 3])).unwrap();
        // Classes a D3 + b D4 reached by 2 + 1 + 1 generators.
        assert_eq!(table[&vec![0, 0]], BigInt::one());
        assert_eq!(table[&vec![-2, 1]], BigInt::one());
        assert_eq!(table[&vec![0, 1]], BigInt::from(4));
    }

    #[test]
    fn reduction_cancels() {
        let s = RationalSeries::new(t(), MultiPoly::one_minus(&[1]).pow(2), vec![(vec![1], 3)]).unwrap();
        assert_eq!(s.reduced().to_string(), "1 / (1 - t)");
        // (1 + t) / (1 - t^2) = 1 / (1 - t)
        let s = RationalSeries::parse("(1 + t) / (1 - t^2)", None).unwrap();
        assert_eq!(s.reduced().to_string(), "1 / (1 - t)");
        let s = RationalSeries::parse("(1 + x*y) / (1 - x*y^2) * (1 - x)^3", None).unwrap();
        assert_eq!(s.reduced(), s);
    }

    #[test]
    fn addition_uses_common_denominators() {
        let a = RationalSeries::parse("1 / (1 - t)", None).unwrap();
        let b = RationalSeries::parse("t / (1 - t)", None).unwrap();
        let c = a.add(&b).unwrap();
        assert!(c.same_function(&RationalSeries::parse("(1 + t) / (1 - t)", None).unwrap()));
        let d = a.add(&a.scale(&BigInt::from(-1))).unwrap();
        assert_eq!(d.to_string(), "0");
    }

    proptest! {
        #[test]
        fn reduction_preserves_expansion(terms in proptest::collection::vec((0i64..4, -4i64..5), 1..5),
                                         d1 in 1u32..3, d2 in 0u32..3) {
            let num = MultiPoly::from_terms(1, terms.iter().map(|(e, c)| (vec![*e], BigInt::from(*c))));
            let s = RationalSeries::new(t(), num, vec![(vec![1], d1), (vec![2], d2)]).unwrap();
            let r = s.reduced();
            prop_assert!(r.same_function(&s));
            prop_assert_eq!(r.expand(12, None).unwrap(), s.expand(12, None).unwrap());
            prop_assert_eq!(RationalSeries::parse(&s.to_string(), Some(&t())).unwrap(), s);
        }
    }
}
