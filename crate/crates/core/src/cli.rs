//! Command-line front end. Exit codes: 0 success, 1 usage or input error,
//! 2 domain error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::cones::{zariski_chambers, RationalCone};
use crate::exact::RatVector;
use crate::io::{load_series_file, parse_fan, parse_toric_divisor, IoError};
use crate::random::random_check;
use crate::series::{chamber_reduced_series, poincare_series, quasi_poly_fit, FnOracle, SeriesOptions};
use crate::surface::{format_combination, Divisor, SurfaceLattice};
use crate::toric::{
    euler_chow_divisors, euler_chow_points, euler_chow_rank_one, euler_chow_top, fixed_part_toric, h0_toric,
    surface_lattice_from_fan, ToricClassOracle,
};
use crate::zariski::zariski_decompose;

#[derive(Parser, Debug)]
#[command(name = "zariski-series", version, about = "Zariski decompositions and section-ring series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SurfaceSource {
    /// Surface JSON file.
    #[arg(long)]
    surface: Option<PathBuf>,
    /// Fan JSON file of a smooth complete toric surface.
    #[arg(long)]
    fan: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zariski decomposition D = P + N.
    ZariskiDecompose {
        #[command(flatten)]
        source: SurfaceSource,
        #[arg(long)]
        divisor: String,
    },
    /// Zariski chambers of the cone spanned by --cone divisors (default: the nef generators).
    Chambers {
        #[command(flatten)]
        source: SurfaceSource,
        #[arg(long = "cone")]
        cone: Vec<String>,
    },
    /// Poincaré series of h0(nD), from a toric divisor or a value list.
    Poincare {
        #[arg(long, requires = "divisor", conflicts_with = "values")]
        fan: Option<PathBuf>,
        #[arg(long)]
        divisor: Option<String>,
        /// Comma-separated h0(0), h0(1), ...
        #[arg(long, required_unless_present = "fan")]
        values: Option<String>,
        #[arg(long)]
        effective: bool,
        #[arg(long, default_value_t = 1)]
        r_hint: usize,
        #[arg(long)]
        window: Option<usize>,
        #[arg(long)]
        reduce: bool,
    },
    /// Multigraded series of h0(D + sum m_i D_i) on a toric surface.
    MultiSeries {
        #[arg(long)]
        fan: PathBuf,
        #[arg(long, default_value = "0")]
        divisor: String,
        #[arg(long = "big", required = true)]
        bigs: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_period: u64,
        #[arg(long, default_value_t = 64)]
        max_shift: usize,
        /// Also print the chamber pieces.
        #[arg(long)]
        report: bool,
    },
    /// Number of lattice points of a toric divisor's polytope.
    ToricH0 {
        #[arg(long)]
        fan: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        fixed_part: bool,
    },
    /// Euler–Chow series of a toric variety.
    EulerChow {
        #[arg(long)]
        fan: PathBuf,
        /// Codimension of the cycles.
        #[arg(long, conflicts_with = "dim", required_unless_present = "dim")]
        codim: Option<usize>,
        /// Dimension of the cycles.
        #[arg(long)]
        dim: Option<usize>,
        /// Assert that the Chow group is Z with all orbit classes equal.
        #[arg(long)]
        rank_one: bool,
    },
    /// Coefficients of a series up to a degree bound.
    Expand {
        #[arg(long)]
        series: PathBuf,
        #[arg(long)]
        bound: i64,
        /// Comma-separated positive weights used as the degree.
        #[arg(long)]
        grading: Option<String>,
    },
    /// Quadratic quasi-polynomial through a value list.
    FitQuasipoly {
        #[arg(long)]
        values: String,
        #[arg(long, default_value_t = 4)]
        max_period: usize,
    },
    /// Zariski decompositions on random catalogues against brute force.
    RandomCheck {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        catalogues: usize,
        #[arg(long, default_value_t = 4)]
        divisors: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Invalid { .. } => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Runs one command line (including the program name); returns the exit code
/// and the text for stdout (code 0) or stderr.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.render().to_string().trim_end().to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => (0, out),
        Err(Failure::Usage(m)) => (1, format!("error: {m}")),
        Err(Failure::Domain(m)) => (2, format!("error: {m}")),
    }
}

fn lattice(source: &SurfaceSource) -> Result<(SurfaceLattice, Vec<RatVector>), Failure> {
    if let Some(p) = &source.surface {
        let file = crate::io::load_surface_file(p)?;
        let s = file.to_lattice()?;
        return Ok((s, file.nef_cone_generators()));
    }
    let fan = parse_fan(source.fan.as_ref().expect("clap group"))?;
    Ok((surface_lattice_from_fan(&fan).map_err(domain)?, Vec::new()))
}

fn parse_values(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("bad value {x:?}"))))
        .collect()
}

fn format_set(s: &SurfaceLattice, idx: impl IntoIterator<Item = usize>) -> String {
    let names: Vec<&str> = idx.into_iter().map(|i| s.labels()[i].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

fn execute(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::ZariskiDecompose { source, divisor } => {
            let (s, _) = lattice(&source)?;
            let d = s.parse_divisor(&divisor).map_err(domain)?;
            let z = zariski_decompose(&s, &d).map_err(domain)?;
            Ok(format!("P = {} ; N = {}", s.format_divisor(&z.positive), s.format_divisor(&z.negative)))
        }
        Command::Chambers { source, cone } => {
            let (s, nef) = lattice(&source)?;
            let gens = if cone.is_empty() {
                nef
            } else {
                cone.iter().map(|c| s.parse_divisor(c).map(|d| d.coords().clone())).collect::<Result<_, _>>().map_err(domain)?
            };
            if gens.is_empty() {
                return Err(Failure::Usage("give --cone divisors or nef_generators in the surface file".into()));
            }
            let w = RationalCone::from_generators(s.rank(), &gens).map_err(domain)?;
            let chambers = zariski_chambers(&s, &w).map_err(domain)?;
            let lines: Vec<String> = chambers
                .iter()
                .map(|c| format!("gamma = {} ; rays = {}", format_set(&s, c.gamma.iter().copied()), c.cone))
                .collect();
            Ok(lines.join("\n"))
        }
        Command::Poincare { fan, divisor, values, effective, r_hint, window, reduce } => {
            let series = if let Some(path) = fan {
                let fan = parse_fan(&path)?;
                let d = parse_toric_divisor(&fan, divisor.as_deref().expect("clap requires"))?;
                let h = FnOracle::new(1, move |m: &[i64]| {
                    h0_toric(&fan, &d.scale(&crate::exact::rat(m[0]))).map_err(|e| e.to_string())
                });
                poincare_series(&h, effective, r_hint, window)
            } else {
                let v = parse_values(values.as_deref().expect("clap requires"))?;
                let len = v.len();
                let h = FnOracle::new(1, move |m: &[i64]| {
                    v.get(m[0] as usize).map(|&x| x as u64).ok_or_else(|| format!("no value for n = {} (have {len})", m[0]))
                });
                poincare_series(&h, effective, r_hint, window)
            }
            .map_err(domain)?;
            Ok(if reduce { series.reduced() } else { series }.to_string())
        }
        Command::MultiSeries { fan, divisor, bigs, max_period, max_shift, report } => {
            let fan = parse_fan(&fan)?;
            let s = surface_lattice_from_fan(&fan).map_err(domain)?;
            let d = s.parse_divisor(&divisor).map_err(domain)?;
            let bigs: Vec<Divisor> = bigs.iter().map(|b| s.parse_divisor(b)).collect::<Result<_, _>>().map_err(domain)?;
            let h = ToricClassOracle::new(&fan).map_err(domain)?;
            let opts = SeriesOptions { max_period, max_shift, ..SeriesOptions::default() };
            let out = chamber_reduced_series(&s, &d, &bigs, &h, &opts).map_err(domain)?;
            let mut text = out.series.to_string();
            if report {
                for p in &out.pieces {
                    let gens: Vec<String> = p.simplex.iter().map(|v| RatVector::from_i64(v).to_string()).collect();
                    let _ = write!(
                        text,
                        "\npiece gamma = {} ; simplex = <{}> ; sign = {} ; periods = {:?} ; shifts = {:?}",
                        format_set(&s, p.gamma.iter().copied()),
                        gens.join(", "),
                        p.coefficient,
                        p.periods,
                        p.shifts
                    );
                }
            }
            Ok(text)
        }
        Command::ToricH0 { fan, divisor, fixed_part } => {
            let fan = parse_fan(&fan)?;
            let d = parse_toric_divisor(&fan, &divisor)?;
            let h = h0_toric(&fan, &d).map_err(domain)?;
            let mut text = h.to_string();
            if fixed_part {
                let f = fixed_part_toric(&fan, &d).map_err(domain)?;
                let names: Vec<String> = (1..=fan.num_rays()).map(|i| format!("D{i}")).collect();
                let _ = write!(text, "\nF = {}", format_combination(&names, f.coeffs()));
            }
            Ok(text)
        }
        Command::EulerChow { fan, codim, dim, rank_one } => {
            let fan = parse_fan(&fan)?;
            let n = fan.dim();
            let p = match (codim, dim) {
                (Some(c), _) if c <= n => n - c,
                (_, Some(p)) if p <= n => p,
                _ => return Err(Failure::Usage(format!("cycle dimension out of range for a fan of dimension {n}"))),
            };
            let series = if rank_one {
                euler_chow_rank_one(&fan, p, true).map_err(domain)?
            } else if p == n {
                euler_chow_top(&fan)
            } else if p == 0 {
                euler_chow_points(&fan)
            } else if p + 1 == n {
                euler_chow_divisors(&fan).map_err(domain)?
            } else {
                return Err(Failure::Domain(format!(
                    "cycles of dimension {p} need --rank-one on a fan of dimension {n}"
                )));
            };
            Ok(series.to_string())
        }
        Command::Expand { series, bound, grading } => {
            let r = load_series_file(&series)?.to_series().map_err(domain)?;
            let w = grading.as_deref().map(parse_values).transpose()?;
            let table = r.expand(bound, w.as_deref()).map_err(domain)?;
            let ones = vec![1; r.vars().len()];
            let w = w.unwrap_or(ones);
            let mut rows: Vec<(i64, &Vec<i64>, &BigInt)> =
                table.iter().map(|(e, c)| (e.iter().zip(&w).map(|(a, b)| a * b).sum(), e, c)).collect();
            rows.sort();
            let lines: Vec<String> = rows
                .iter()
                .map(|(_, e, c)| {
                    let e: Vec<String> = e.iter().map(i64::to_string).collect();
                    format!("({}) : {c}", e.join(", "))
                })
                .collect();
            Ok(lines.join("\n"))
        }
        Command::FitQuasipoly { values, max_period } => {
            let v = parse_values(&values)?;
            Ok(quasi_poly_fit(&v, max_period).map_err(domain)?.to_string())
        }
        Command::RandomCheck { seed, catalogues, divisors } => {
            let r = random_check(seed, catalogues, divisors);
            if r.failures.is_empty() {
                Ok(format!("seed {seed}: {} catalogues, {} divisors, all decompositions agree", r.catalogues, r.divisors))
            } else {
                Err(Failure::Domain(r.failures.join("\n")))
            }
        }
    }
}
