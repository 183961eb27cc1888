//! JSON surface, fan and series files.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{RatMatrix, RatVector};
use crate::series::{RationalSeries, SeriesError};
use crate::surface::{split_signed_terms, SurfaceLattice};
use crate::toric::{Fan, ToricDivisor, ToricError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {0}: {1}")]
    Read(String, String),
    #[error("malformed JSON in {0}: {1}")]
    Json(String, String),
    #[error("invalid {path}: {message}")]
    Invalid { path: String, message: String },
}

impl IoError {
    fn invalid(path: impl Into<String>, message: impl Into<String>) -> Self {
        IoError::Invalid { path: path.into(), message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveEntry {
    pub name: String,
    pub class: Vec<i64>,
}

/// `{"basis": [...], "form": [[...]], "curves": [{"name", "class"}], "nef_generators"?: [[...]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    pub basis: Vec<String>,
    pub form: Vec<Vec<i64>>,
    pub curves: Vec<CurveEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nef_generators: Option<Vec<Vec<i64>>>,
}

/// `{"dim": n, "rays": [[...]], "max_cones": [[...]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

/// `{"vars"?: [...], "series": "..."}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub series: String,
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|e| IoError::Read(path.display().to_string(), e.to_string()))
}

fn from_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Json(path.display().to_string(), e.to_string()))
}

impl SurfaceFile {
    pub fn to_lattice(&self) -> Result<SurfaceLattice, IoError> {
        let r = self.basis.len();
        if self.form.len() != r {
            return Err(IoError::invalid("form", format!("{} rows for {r} basis names", self.form.len())));
        }
        for (i, row) in self.form.iter().enumerate() {
            if row.len() != r {
                return Err(IoError::invalid(format!("form[{i}]"), format!("length {}, expected {r}", row.len())));
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                if self.form[i][j] != self.form[j][i] {
                    return Err(IoError::invalid(
                        format!("form[{i}][{j}]"),
                        format!("{} differs from form[{j}][{i}] = {}", self.form[i][j], self.form[j][i]),
                    ));
                }
            }
        }
        for (i, c) in self.curves.iter().enumerate() {
            if c.class.len() != r {
                return Err(IoError::invalid(format!("curves[{i}].class"), format!("length {}, expected {r}", c.class.len())));
            }
            if c.name.is_empty() || c.name.contains(|ch: char| ch.is_whitespace() || "+-*/".contains(ch)) {
                return Err(IoError::invalid(format!("curves[{i}].name"), format!("{:?} is not a usable name", c.name)));
            }
        }
        if let Some(g) = &self.nef_generators {
            for (i, v) in g.iter().enumerate() {
                if v.len() != r {
                    return Err(IoError::invalid(format!("nef_generators[{i}]"), format!("length {}, expected {r}", v.len())));
                }
            }
        }
        let rows: Vec<&[i64]> = self.form.iter().map(Vec::as_slice).collect();
        let form = RatMatrix::from_i64_rows(&rows).map_err(|e| IoError::invalid("form", e.to_string()))?;
        let curves = self.curves.iter().map(|c| (c.name.clone(), RatVector::from_i64(&c.class))).collect();
        SurfaceLattice::new(self.basis.clone(), form, curves).map_err(|e| IoError::invalid("curves", e.to_string()))
    }

    pub fn from_lattice(s: &SurfaceLattice, nef_generators: Option<Vec<Vec<i64>>>) -> Self {
        let form = (0..s.rank())
            .map(|i| (0..s.rank()).map(|j| s.form().get(i, j).to_integer().try_into().expect("small form")).collect())
            .collect();
        let curves = s
            .labels()
            .iter()
            .zip(s.curves())
            .map(|(n, c)| CurveEntry { name: n.clone(), class: c.to_i64().expect("integral curve") })
            .collect();
        SurfaceFile { basis: s.basis_names().to_vec(), form, curves, nef_generators }
    }

    pub fn nef_cone_generators(&self) -> Vec<RatVector> {
        self.nef_generators.iter().flatten().map(|v| RatVector::from_i64(v)).collect()
    }
}

impl FanFile {
    pub fn to_fan(&self) -> Result<Fan, IoError> {
        for (i, r) in self.rays.iter().enumerate() {
            if r.len() != self.dim {
                return Err(IoError::invalid(format!("rays[{i}]"), format!("length {}, expected {}", r.len(), self.dim)));
            }
            if r.iter().fold(0i64, |g, &x| num_integer::gcd(g, x)) != 1 {
                return Err(IoError::invalid(format!("rays[{i}]"), "not a primitive vector"));
            }
        }
        for (i, c) in self.max_cones.iter().enumerate() {
            for (j, &k) in c.iter().enumerate() {
                if k >= self.rays.len() {
                    return Err(IoError::invalid(format!("max_cones[{i}][{j}]"), format!("ray index {k} out of range")));
                }
            }
        }
        Fan::new(self.dim, self.rays.clone(), self.max_cones.clone()).map_err(|e| match e {
            ToricError::NotComplete(m) => IoError::invalid("max_cones", format!("fan is not complete: {m}")),
            other => IoError::invalid("fan", other.to_string()),
        })
    }

    pub fn from_fan(f: &Fan) -> Self {
        FanFile { dim: f.dim(), rays: f.rays().to_vec(), max_cones: f.max_cones().to_vec() }
    }
}

impl SeriesFile {
    pub fn to_series(&self) -> Result<RationalSeries, SeriesError> {
        RationalSeries::parse(&self.series, self.vars.as_deref())
    }
}

pub fn load_surface_file(path: &Path) -> Result<SurfaceFile, IoError> {
    from_json(path, &read(path)?)
}

pub fn parse_surface(path: &Path) -> Result<SurfaceLattice, IoError> {
    load_surface_file(path)?.to_lattice()
}

pub fn load_fan_file(path: &Path) -> Result<FanFile, IoError> {
    from_json(path, &read(path)?)
}

pub fn parse_fan(path: &Path) -> Result<Fan, IoError> {
    load_fan_file(path)?.to_fan()
}

/// A JSON series file, or a bare series string.
pub fn load_series_file(path: &Path) -> Result<SeriesFile, IoError> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        from_json(path, &text)
    } else {
        Ok(SeriesFile { vars: None, series: text.trim().to_string() })
    }
}

/// `"[0, 1, 2]"` or `"2 D3 + D1"` with rays named `D1, D2, ...`.
pub fn parse_toric_divisor(fan: &Fan, s: &str) -> Result<ToricDivisor, IoError> {
    let n = fan.num_rays();
    let bad = |m: String| IoError::invalid("divisor", m);
    let t = s.trim();
    if t.starts_with('[') || t.contains(',') {
        let inner = t.trim_start_matches('[').trim_end_matches(']');
        let coeffs = inner
            .split(',')
            .map(|x| crate::exact::parse_rational(x).ok_or_else(|| bad(format!("bad coefficient {x:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() != n {
            return Err(bad(format!("{} coefficients for {n} rays", coeffs.len())));
        }
        return Ok(ToricDivisor::new(coeffs));
    }
    let mut coeffs = vec![crate::exact::rat(0); n];
    if t == "0" {
        return Ok(ToricDivisor::new(coeffs));
    }
    for (neg, term) in split_signed_terms(t).map_err(bad)? {
        let at = term.find('D').ok_or_else(|| bad(format!("term {term:?} names no ray")))?;
        let (c, name) = term.split_at(at);
        let c = c.trim().trim_end_matches('*').trim();
        let c = if c.is_empty() { crate::exact::rat(1) } else { crate::exact::parse_rational(c).ok_or_else(|| bad(format!("bad coefficient {c:?}")))? };
        let k: usize = name[1..].trim().parse().map_err(|_| bad(format!("bad ray name {name:?}")))?;
        if k == 0 || k > n {
            return Err(bad(format!("no ray {name}")));
        }
        coeffs[k - 1] += if neg { -c } else { c };
    }
    Ok(ToricDivisor::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    const F2: &str = r#"{"basis": ["E", "f"], "form": [[-2, 1], [1, 0]],
        "curves": [{"name": "E", "class": [1, 0]}, {"name": "f", "class": [0, 1]}],
        "nef_generators": [[1, 2], [0, 1]]}"#;

    #[test]
    fn surface_round_trip() {
        let file: SurfaceFile = serde_json::from_str(F2).unwrap();
        let s = file.to_lattice().unwrap();
        assert_eq!(s.basis_names(), ["E", "f"]);
        assert_eq!(s.self_intersection(0), rat(-2));
        let back = SurfaceFile::from_lattice(&s, file.nef_generators.clone());
        assert_eq!(back, file);
        let text = serde_json::to_string(&back).unwrap();
        assert_eq!(serde_json::from_str::<SurfaceFile>(&text).unwrap(), file);
    }

    #[test]
    fn asymmetric_form_names_the_cell() {
        let mut file: SurfaceFile = serde_json::from_str(F2).unwrap();
        file.form[0][1] = 2;
        let e = file.to_lattice().unwrap_err();
        assert!(matches!(&e, IoError::Invalid { path, .. } if path == "form[0][1]"), "{e}");
        file.form[0][1] = 1;
        file.curves[1].class = vec![0, 1, 0];
        assert!(matches!(file.to_lattice().unwrap_err(), IoError::Invalid { path, .. } if path == "curves[1].class"));
    }

    #[test]
    fn fan_files() {
        let p2: FanFile = serde_json::from_str(r#"{"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]]}"#).unwrap();
        let fan = p2.to_fan().unwrap();
        assert_eq!((fan.num_rays(), fan.max_cones().len()), (3, 3));
        assert_eq!(FanFile::from_fan(&fan), p2);
        let mut bad = p2.clone();
        bad.max_cones[1][1] = 5;
        assert!(matches!(bad.to_fan().unwrap_err(), IoError::Invalid { path, .. } if path == "max_cones[1][1]"));
        let mut bad = p2;
        bad.rays[2] = vec![-2, -2];
        assert!(matches!(bad.to_fan().unwrap_err(), IoError::Invalid { path, .. } if path == "rays[2]"));
    }

    #[test]
    fn toric_divisor_strings() {
        let fan = Fan::hirzebruch(2);
        let d = parse_toric_divisor(&fan, "2 D3 + 1/2 D1 - D4").unwrap();
        assert_eq!(d.coeffs(), &[ratio(1, 2), rat(0), rat(2), rat(-1)]);
        assert_eq!(parse_toric_divisor(&fan, "[0, 1, 0, 0]").unwrap(), ToricDivisor::from_i64(&[0, 1, 0, 0]));
        assert!(parse_toric_divisor(&fan, "D5").is_err());
        assert!(parse_toric_divisor(&fan, "[1, 2]").is_err());
    }
}
