//! Random curve catalogues on blow-ups of the plane, for seeded property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{RatMatrix, RatVector, Rational};
use crate::surface::{Divisor, SurfaceLattice};
use crate::zariski::{brute_force_decompositions, check_axioms, zariski_decompose};

/// Blow-up of the plane in `k` points (basis `H, E1, ..., Ek`), optionally
/// with three collinear points, and a random subset of at most `max_curves`
/// of its lines, conics and exceptional curves.
pub fn random_catalogue<R: Rng>(rng: &mut R, max_curves: usize) -> SurfaceLattice {
    let k: usize = rng.gen_range(2..=5);
    let triple = (k >= 3 && rng.gen_bool(0.5)).then(|| {
        let mut t: Vec<usize> = (0..k).collect();
        t.shuffle(rng);
        let mut t = t[..3].to_vec();
        t.sort();
        t
    });
    let class = |h: i64, es: &[(usize, i64)]| {
        let mut v = vec![0i64; k + 1];
        v[0] = h;
        for &(i, c) in es {
            v[i + 1] = c;
        }
        RatVector::from_i64(&v)
    };
    let mut cands: Vec<(String, RatVector)> = Vec::new();
    for i in 0..k {
        cands.push((format!("E{}", i + 1), class(0, &[(i, 1)])));
        cands.push((format!("F{}", i + 1), class(1, &[(i, -1)])));
        for j in i + 1..k {
            let inside = triple.as_ref().is_some_and(|t| t.contains(&i) && t.contains(&j));
            if !inside {
                cands.push((format!("L{}{}", i + 1, j + 1), class(1, &[(i, -1), (j, -1)])));
            }
        }
    }
    cands.push(("H".into(), class(1, &[])));
    match &triple {
        Some(t) => {
            let es: Vec<(usize, i64)> = t.iter().map(|&i| (i, -1)).collect();
            cands.push((format!("L{}{}{}", t[0] + 1, t[1] + 1, t[2] + 1), class(1, &es)));
        }
        None if k == 5 => cands.push(("Q".into(), class(2, &[(0, -1), (1, -1), (2, -1), (3, -1), (4, -1)]))),
        None => {}
    }
    cands.shuffle(rng);
    let take = rng.gen_range(1..=max_curves.min(cands.len()).max(1));
    cands.truncate(take);
    let mut form = vec![vec![0i64; k + 1]; k + 1];
    form[0][0] = 1;
    for (i, row) in form.iter_mut().enumerate().skip(1) {
        row[i] = -1;
    }
    let rows: Vec<&[i64]> = form.iter().map(Vec::as_slice).collect();
    let basis = std::iter::once("H".to_string()).chain((1..=k).map(|i| format!("E{i}"))).collect();
    SurfaceLattice::new(basis, RatMatrix::from_i64_rows(&rows).expect("square"), cands).expect("valid catalogue")
}

/// A nonzero nonnegative rational combination of catalogued curves.
pub fn random_effective<R: Rng>(rng: &mut R, s: &SurfaceLattice) -> Divisor {
    loop {
        let coeffs: Vec<Rational> = (0..s.num_curves())
            .map(|_| {
                let num = if rng.gen_bool(0.4) { 0 } else { rng.gen_range(1..=6) };
                Rational::new(num.into(), rng.gen_range(1i64..=3).into())
            })
            .collect();
        let d = s.combine_curves(&coeffs);
        if !d.is_zero() {
            return d;
        }
    }
}

/// Outcome of [`random_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomCheck {
    pub catalogues: usize,
    pub divisors: usize,
    pub failures: Vec<String>,
}

/// Decomposes random effective divisors on `catalogues` random catalogues and
/// compares each result with the axioms and the brute-force search.
pub fn random_check(seed: u64, catalogues: usize, per_catalogue: usize) -> RandomCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for c in 0..catalogues {
        let s = random_catalogue(&mut rng, 12);
        for _ in 0..per_catalogue {
            let d = random_effective(&mut rng, &s);
            let shown = s.format_divisor(&d);
            match zariski_decompose(&s, &d) {
                Err(e) => failures.push(format!("catalogue {c}, D = {shown}: {e}")),
                Ok(z) => {
                    if let Err(e) = check_axioms(&s, &d, &z) {
                        failures.push(format!("catalogue {c}, D = {shown}: {e}"));
                    }
                    let all = brute_force_decompositions(&s, &d);
                    if all != [z] {
                        failures.push(format!("catalogue {c}, D = {shown}: {} brute-force solutions", all.len()));
                    }
                }
            }
        }
    }
    RandomCheck { catalogues, divisors: catalogues * per_catalogue, failures }
}
