//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zariski_series::cones::{zariski_chambers, RationalCone, SimplicialCone};
use zariski_series::exact::{rat, ratio, RatMatrix, RatVector, Rational};
use zariski_series::random::random_check;
use zariski_series::series::{
    chamber_reduced_series, cone_series, inclusion_exclusion, poincare_series, quasi_poly_fit, FnOracle,
    RationalSeries, SeriesOptions,
};
use zariski_series::surface::{Divisor, SurfaceLattice};
use zariski_series::toric::{
    divisor_class_group, euler_chow_divisors, DivisorClassGroup, euler_chow_points, euler_chow_rank_one, euler_chow_top,
    fixed_part_toric, h0_toric, surface_lattice_from_fan, Fan, ToricClassOracle, ToricDivisor,
};
use zariski_series::zariski::{brute_force_decompositions, check_axioms, zariski_decompose};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn geometric_power(k: u64) -> String {
    match k {
        1 => "1 / (1 - t)".into(),
        _ => format!("1 / (1 - t)^{k}"),
    }
}

/// Lattice points of `{u : <u, v_rho> >= -a_rho}`, counted over a box of
/// radius `dim (1 + max |ray entry|) sum |a_rho|`, which contains the polytope
/// for projective spaces and Hirzebruch surfaces.
fn brute_h0(fan: &Fan, coeffs: &[Rational]) -> u64 {
    let rays = fan.rays();
    let bounds: Vec<i64> = coeffs.iter().map(|a| (-a).ceil().to_integer().try_into().unwrap()).collect();
    let d = fan.dim();
    let size: i64 = coeffs.iter().map(|a| a.abs().ceil().to_integer()).sum::<BigInt>().try_into().unwrap();
    let spread = 1 + rays.iter().flatten().map(|x| x.abs()).max().unwrap_or(1);
    let radius = d as i64 * spread * size + 1;
    let mut count = 0;
    let mut u = vec![-radius; d];
    loop {
        if rays.iter().zip(&bounds).all(|(v, b)| v.iter().zip(&u).map(|(x, y)| x * y).sum::<i64>() >= *b) {
            count += 1;
        }
        let mut i = 0;
        while i < d {
            u[i] += 1;
            if u[i] <= radius {
                break;
            }
            u[i] = -radius;
            i += 1;
        }
        if i == d {
            return count;
        }
    }
}

/// Box-scan `h0` of the class with coordinates `m`.
fn brute_class(fan: &Fan, group: &DivisorClassGroup, m: &[i64]) -> u64 {
    brute_h0(fan, group.representative(m).unwrap().coeffs())
}

fn criterion_1() -> Check {
    for n in 1..=4usize {
        let fan = Fan::projective_space(n);
        for p in 0..=n {
            let want = geometric_power(binom(n as u64 + 1, p as u64 + 1));
            let got = euler_chow_rank_one(&fan, p, true).map_err(|e| e.to_string())?.to_string();
            ensure(got == want, || format!("P^{n}, p = {p}: {got} != {want}"))?;
        }
        let got = euler_chow_divisors(&fan).map_err(|e| e.to_string())?.to_string();
        let want = geometric_power(n as u64 + 1);
        ensure(got == want, || format!("P^{n} divisors: {got} != {want}"))?;
    }
    Ok("P^1..P^4, all p".into())
}

fn criterion_2() -> Check {
    for a in 1..=3i64 {
        let fan = Fan::hirzebruch(a);
        let g = divisor_class_group(&fan).map_err(|e| e.to_string())?;
        // Relations t1 ~ t3 and t2 + a t3 - t4.
        let c: Vec<Vec<i64>> = (0..4).map(|r| g.ray_class(r).to_vec()).collect();
        ensure(c[0] == c[2], || format!("a = {a}: [D1] != [D3]"))?;
        ensure((0..2).all(|i| c[1][i] + a * c[2][i] - c[3][i] == 0), || format!("a = {a}: t2 + a t3 - t4 fails"))?;
        let e0 = euler_chow_points(&fan).to_string();
        let e1 = euler_chow_divisors(&fan).map_err(|e| e.to_string())?;
        let e2 = euler_chow_top(&fan).to_string();
        let want1 = format!("1 / (1 - t3)^2 * (1 - t4) * (1 - t3^-{a}*t4)");
        let paper = RationalSeries::parse(&want1, Some(&["t3".to_string(), "t4".to_string()])).map_err(|e| e.to_string())?;
        ensure(e0 == "1 / (1 - t)^4", || format!("a = {a}: E0 = {e0}"))?;
        ensure(e1.to_string() == want1 && e1.same_function(&paper), || format!("a = {a}: E1 = {e1}"))?;
        ensure(e2 == "1 / (1 - t)", || format!("a = {a}: E2 = {e2}"))?;
    }
    Ok("a = 1, 2, 3".into())
}

fn lattice(form: &[&[i64]], basis: &[&str], curves: &[(&str, &[i64])]) -> SurfaceLattice {
    SurfaceLattice::new(
        basis.iter().map(|s| s.to_string()).collect(),
        RatMatrix::from_i64_rows(form).unwrap(),
        curves.iter().map(|(n, c)| (n.to_string(), RatVector::from_i64(c))).collect(),
    )
    .unwrap()
}

fn f1() -> SurfaceLattice {
    lattice(&[&[1, 0], &[0, -1]], &["H", "E"], &[("E", &[0, 1]), ("L", &[1, -1])])
}

fn f2() -> SurfaceLattice {
    lattice(&[&[-2, 1], &[1, 0]], &["E", "f"], &[("E", &[1, 0]), ("f", &[0, 1])])
}

fn p1p1() -> SurfaceLattice {
    lattice(&[&[0, 1], &[1, 0]], &["A", "B"], &[("A", &[1, 0]), ("B", &[0, 1])])
}

fn criterion_3() -> Check {
    let mut count = 0;
    for s in [f1(), f2(), p1p1()] {
        for a in 0..8i64 {
            for b in 0..8i64 {
                for den in 1..=3i64 {
                    let d = s.combine_curves(&[ratio(a, den), ratio(b, 1)]);
                    let z = zariski_decompose(&s, &d).map_err(|e| e.to_string())?;
                    check_axioms(&s, &d, &z)?;
                    let all = brute_force_decompositions(&s, &d);
                    ensure(all == [z], || format!("{}: {} brute-force decompositions", s.format_divisor(&d), all.len()))?;
                    count += 1;
                }
            }
        }
    }
    let r = random_check(2024, 50, 4);
    ensure(r.failures.is_empty(), || r.failures.join("; "))?;
    Ok(format!("{count} fixed divisors, {} random divisors on {} catalogues", r.divisors, r.catalogues))
}

fn criterion_4() -> Check {
    let s = f2();
    let d1 = RatVector::from_i64(&[1, 3]);
    let d2 = RatVector::from_i64(&[1, 1]);
    let w = RationalCone::from_generators(2, &[d1.clone(), d2.clone()]).map_err(|e| e.to_string())?;
    let chambers = zariski_chambers(&s, &w).map_err(|e| e.to_string())?;
    ensure(chambers.len() == 2, || format!("{} chambers", chambers.len()))?;
    let wall = RatVector::from_i64(&[1, 2]);
    for c in &chambers {
        ensure(c.cone.rays().contains(&wall), || format!("chamber {} misses the wall E + 2f", c.cone))?;
    }
    // Grid of W: D = x D1 + y D2.
    let mut samples = 0;
    for i in 1..=40i64 {
        for j in 0..25i64 {
            let d = &d1.scale(&ratio(i, 3)) + &d2.scale(&ratio(j, 2));
            let z = zariski_decompose(&s, &Divisor::new(d.clone())).map_err(|e| e.to_string())?;
            let containing: Vec<_> = chambers.iter().filter(|c| c.cone.contains(&d)).collect();
            ensure(!containing.is_empty(), || format!("{d} is in no chamber"))?;
            for c in &containing {
                ensure(z.support.is_subset(&c.gamma), || format!("{d}: support outside chamber gamma"))?;
                if c.cone.contains_relative_interior(&d) {
                    ensure(z.support == c.gamma, || format!("{d}: interior support mismatch"))?;
                }
            }
            samples += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 0..100 {
        let c = &chambers[k % 2];
        let gens = c.cone.rays();
        let point = |rng: &mut ChaCha8Rng| {
            gens.iter().fold(RatVector::zeros(2), |acc, g| &acc + &g.scale(&ratio(rng.gen_range(1..20), rng.gen_range(1..5))))
        };
        let (p, q) = (point(&mut rng), point(&mut rng));
        let (x, y) = (ratio(rng.gen_range(1..9), rng.gen_range(1..5)), ratio(rng.gen_range(1..9), rng.gen_range(1..5)));
        let n = |v: &RatVector| zariski_decompose(&s, &Divisor::new(v.clone())).map(|z| z.negative);
        let lhs = n(&(&p.scale(&x) + &q.scale(&y))).map_err(|e| e.to_string())?;
        let rhs = &n(&p).map_err(|e| e.to_string())?.scale(&x) + &n(&q).map_err(|e| e.to_string())?.scale(&y);
        ensure(lhs == rhs, || format!("N not linear at {p}, {q}"))?;
    }
    Ok(format!("2 chambers, wall E + 2f, {samples} grid samples, 100 linear pairs"))
}

/// Compares an expansion with `h` on every lattice point of degree at most
/// `bound` in `region`; points outside `region` must not appear.
fn compare(
    series: &RationalSeries,
    bound: i64,
    grading: &[i64],
    region: &dyn Fn(&[i64]) -> bool,
    h: &dyn Fn(&[i64]) -> u64,
    label: &str,
) -> Result<usize, String> {
    let table = series.expand(bound, Some(grading)).map_err(|e| format!("{label}: {e}"))?;
    let l = grading.len();
    let mut checked = 0;
    // All points of degree <= bound in the box [-2 bound, 2 bound]^l.
    let r = 2 * bound;
    let mut m = vec![-r; l];
    loop {
        let deg: i64 = m.iter().zip(grading).map(|(a, b)| a * b).sum();
        if deg <= bound {
            let got = table.get(&m).cloned().unwrap_or_else(BigInt::zero);
            let want = if region(&m) { BigInt::from(h(&m)) } else { BigInt::zero() };
            ensure(got == want, || format!("{label}: coefficient at {m:?} is {got}, expected {want}"))?;
            checked += 1;
        }
        let mut i = 0;
        while i < l {
            m[i] += 1;
            if m[i] <= r {
                break;
            }
            m[i] = -r;
            i += 1;
        }
        if i == l {
            break;
        }
    }
    ensure(table.keys().all(|k| k.iter().all(|x| x.abs() <= r)), || format!("{label}: terms outside the scan box"))?;
    Ok(checked)
}

fn criterion_5() -> Check {
    let opts = SeriesOptions::default();
    let mut compared = 0;
    let mut emitted = 0;
    let e = |e: &dyn std::fmt::Display| e.to_string();
    let p2 = Fan::projective_space(2);
    let f2 = Fan::hirzebruch(2);
    let q = Fan::p1xp1();
    let g2 = divisor_class_group(&f2).map_err(|x| e(&x))?;
    let gp = divisor_class_group(&p2).map_err(|x| e(&x))?;

    // Poincaré series of h0(nD).
    let cases: Vec<(&Fan, Vec<Rational>, bool, usize, &str)> = vec![
        (&p2, vec![rat(0), rat(0), rat(1)], true, 1, "P2 H"),
        (&p2, vec![rat(0), rat(0), ratio(1, 2)], false, 2, "P2 H/2"),
        (&f2, vec![rat(1), rat(2), rat(0), rat(0)], true, 2, "F2 2E + f"),
        (&q, vec![rat(1), rat(1), rat(0), rat(0)], true, 1, "P1xP1 (1,1)"),
    ];
    for (fan, d, eff, r, label) in cases {
        let scaled = |n: i64| ToricDivisor::new(d.iter().map(|c| c * rat(n)).collect());
        let h = FnOracle::new(1, |m: &[i64]| h0_toric(fan, &scaled(m[0])).map_err(|x| x.to_string()));
        let s = poincare_series(&h, eff, r, None).map_err(|x| format!("{label}: {x}"))?;
        emitted += 1;
        compared += compare(&s, 40, &[1], &|m| m[0] >= 0, &|m| brute_h0(fan, scaled(m[0]).coeffs()), label)?;
    }

    // Simplicial cone series in class coordinates.
    let tf = ToricClassOracle::new(&f2).map_err(|x| e(&x))?;
    let tp = ToricClassOracle::new(&p2).map_err(|x| e(&x))?;
    let vars = vec!["x".to_string(), "y".to_string()];
    let sc = SimplicialCone::new(vec![RatVector::from_i64(&[1, 0]), RatVector::from_i64(&[1, 2])]).map_err(|x| e(&x))?;
    let s = cone_series(&sc, &tf, &vars, None, &opts).map_err(|x| format!("cone <(1,0),(1,2)>: {x}"))?;
    emitted += 1;
    let in_cone = |m: &[i64]| m[1] >= 0 && 2 * m[0] - m[1] >= 0;
    compared += compare(&s, 15, &[1, 1], &in_cone, &|m| brute_class(&f2, &g2, m), "cone <(1,0),(1,2)>")?;
    let ray = SimplicialCone::new(vec![RatVector::from_i64(&[1])]).map_err(|x| e(&x))?;
    let s = cone_series(&ray, &tp, &["t".to_string()], None, &opts).map_err(|x| format!("ray of H: {x}"))?;
    emitted += 1;
    compared += compare(&s, 40, &[1], &|m| m[0] >= 0, &|m| brute_class(&p2, &gp, m), "ray of H on P2")?;

    // Effective cone of F2 split along the nef wall, classes in (D3, D4).
    let cones = [
        RationalCone::from_generators(2, &[RatVector::from_i64(&[-2, 1]), RatVector::from_i64(&[0, 1])]).map_err(|x| e(&x))?,
        RationalCone::from_generators(2, &[RatVector::from_i64(&[0, 1]), RatVector::from_i64(&[1, 0])]).map_err(|x| e(&x))?,
    ];
    let s = inclusion_exclusion(&cones, &tf, &vars, &opts).map_err(|x| format!("Eff(F2): {x}"))?;
    emitted += 1;
    let eff = |m: &[i64]| m[1] >= 0 && m[0] + 2 * m[1] >= 0;
    compared += compare(&s, 15, &[1, 3], &eff, &|m| brute_class(&f2, &g2, m), "Eff(F2)")?;

    // Chamber reductions.
    let sl = surface_lattice_from_fan(&f2).map_err(|x| e(&x))?;
    let runs: Vec<(&str, Vec<&str>, i64)> = vec![
        ("0", vec!["2 D2 + D1"], 40),
        ("0", vec!["D2 + 2 D1", "D2 + 3 D1"], 15),
        ("0", vec!["D2 + D1", "D2 + 3 D1"], 15),
        ("-D4", vec!["D2 + D1"], 40),
        ("D2", vec!["D2 + D1", "D1 + D4"], 15),
    ];
    for (d, bigs, bound) in runs {
        let label = format!("D = {d}, bigs = {bigs:?}");
        let dd = sl.parse_divisor(d).map_err(|x| e(&x))?;
        let bs: Vec<Divisor> = bigs.iter().map(|b| sl.parse_divisor(b)).collect::<Result<_, _>>().map_err(|x| e(&x))?;
        let out = chamber_reduced_series(&sl, &dd, &bs, &tf, &opts).map_err(|x| format!("{label}: {x}"))?;
        emitted += 1;
        let base = dd.coords().to_i64().unwrap();
        let ints: Vec<Vec<i64>> = bs.iter().map(|b| b.coords().to_i64().unwrap()).collect();
        let class = |m: &[i64]| -> Vec<i64> {
            let mut c = base.clone();
            for (mi, b) in m.iter().zip(&ints) {
                c[0] += mi * b[0];
                c[1] += mi * b[1];
            }
            c
        };
        let w = vec![1; bs.len()];
        let orthant = |m: &[i64]| m.iter().all(|x| *x >= 0);
        compared += compare(&out.series, bound, &w, &orthant, &|m| brute_class(&f2, &g2, &class(m)), &label)?;
    }
    let p2s = surface_lattice_from_fan(&p2).map_err(|x| e(&x))?;
    let out = chamber_reduced_series(&p2s, &Divisor::zero(1), &[Divisor::from_i64(&[1])], &tp, &opts).map_err(|x| e(&x))?;
    emitted += 1;
    ensure(out.series.to_string() == "1 / (1 - t)^3", || format!("P2 chamber series {}", out.series))?;
    compared += compare(&out.series, 40, &[1], &|m| m[0] >= 0, &|m| brute_class(&p2, &gp, m), "P2 chamber")?;
    Ok(format!("{emitted} series, {compared} coefficients, 0 mismatches"))
}

fn criterion_6() -> Check {
    let mut divisors: Vec<(Fan, Vec<i64>)> = Vec::new();
    let fans = [Fan::hirzebruch(1), Fan::hirzebruch(2), Fan::hirzebruch(3), Fan::p1xp1()];
    'outer: for (k, fan) in fans.iter().enumerate() {
        for c in [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [2, 1, 0, 0], [0, 1, 1, 1]] {
            divisors.push((fan.clone(), c.to_vec()));
            if divisors.len() == 20 {
                break 'outer;
            }
        }
        let _ = k;
    }
    ensure(divisors.len() == 20, || "fixture count".into())?;
    for (fan, c) in &divisors {
        let v: Vec<i64> = (0..40)
            .map(|n| brute_h0(fan, &c.iter().map(|x| rat(x * n)).collect::<Vec<_>>()) as i64)
            .collect();
        let q = quasi_poly_fit(&v, 4).map_err(|e| format!("{c:?}: {e}"))?;
        ensure(q.leading_constant(), || format!("{c:?} on {:?}: a or b varies with the residue\n{q}", fan.rays()))?;
    }
    let p2 = Fan::projective_space(2);
    let v: Vec<i64> = (0..40).map(|n| brute_h0(&p2, &[rat(0), rat(0), ratio(n, 2)]) as i64).collect();
    let q = quasi_poly_fit(&v, 4).map_err(|e| e.to_string())?;
    ensure(q.period() == 2, || format!("half triangle period {}", q.period()))?;
    let want = [[ratio(1, 8), ratio(3, 4), rat(1)], [ratio(1, 8), ratio(1, 2), ratio(3, 8)]];
    ensure(q.coefficients(0) == &want[0] && q.coefficients(1) == &want[1], || format!("half triangle table\n{q}"))?;
    Ok("20 effective divisors with constant a, b; half triangle period 2".into())
}

fn criterion_7() -> Check {
    let fan = Fan::hirzebruch(2);
    let s = surface_lattice_from_fan(&fan).map_err(|e| e.to_string())?;
    let d = s.parse_divisor("2 D2 + D1").map_err(|e| e.to_string())?;
    let z = zariski_decompose(&s, &d).map_err(|e| e.to_string())?;
    let e_idx = s.curve_index("D2").unwrap();
    ensure(z.coefficient(e_idx) == ratio(3, 2) && z.support.len() == 1, || "N is not 3/2 E".into())?;
    let target = [rat(0), ratio(3, 2), rat(0), rat(0)];
    let mut norm: BTreeMap<i64, Vec<Rational>> = BTreeMap::new();
    for n in 1..=60i64 {
        let f = fixed_part_toric(&fan, &ToricDivisor::from_i64(&[n, 2 * n, 0, 0])).map_err(|e| e.to_string())?;
        let v: Vec<Rational> = f.coeffs().iter().map(|c| c / rat(n)).collect();
        let dist = v.iter().zip(&target).map(|(a, b)| (a - b).abs()).max().unwrap();
        ensure(dist <= ratio(2, n), || format!("n = {n}: distance {dist}"))?;
        norm.insert(n, v);
    }
    for start in 1..=15i64 {
        let mut n = start;
        while 2 * n <= 60 {
            let (a, b) = (&norm[&n], &norm[&(2 * n)]);
            ensure(a.iter().zip(b).all(|(x, y)| y <= x), || format!("increase from n = {n} to {}", 2 * n))?;
            n *= 2;
        }
    }
    Ok("n <= 60 within 2/n, chains non-increasing".into())
}

fn main() {
    let checks: [(u32, fn() -> Check, Duration); 7] = [
        (1, criterion_1, Duration::from_secs(1)),
        (2, criterion_2, Duration::from_secs(1)),
        (3, criterion_3, Duration::from_secs(30)),
        (4, criterion_4, Duration::from_secs(30)),
        (5, criterion_5, Duration::from_secs(120)),
        (6, criterion_6, Duration::from_secs(120)),
        (7, criterion_7, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (k, f, limit) in checks {
        let t = Instant::now();
        let result = f();
        let el = t.elapsed();
        let (status, note) = match result {
            Ok(m) if el <= limit => ("PASS", m),
            Ok(m) => ("FAIL", format!("{m}; took {el:.2?}, limit {limit:?}")),
            Err(m) => ("FAIL", m),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {k}: {status} ({el:.2?}) {note}");
    }
    let status = if failed == 0 { "PASS" } else { "FAIL" };
    println!("criterion 8: {status} headline theorems are checked through their constructive steps in criteria 3-7");
    if failed > 0 {
        std::process::exit(1);
    }
}
