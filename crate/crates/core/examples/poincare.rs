//! Poincare series of section rings on P2 and F2, from toric lattice point counts.

use zariski_series::exact::{rat, ratio};
use zariski_series::series::{poincare_series, FnOracle};
use zariski_series::toric::{h0_toric, Fan, ToricDivisor};
use zariski_series::Rational;

fn show(fan: &Fan, d: Vec<Rational>, effective: bool, r: usize, label: &str) -> Result<(), Box<dyn std::error::Error>> {
    let h = FnOracle::new(1, |m: &[i64]| {
        let nd = ToricDivisor::new(d.iter().map(|c| c * rat(m[0])).collect());
        h0_toric(fan, &nd).map_err(|e| e.to_string())
    });
    let s = poincare_series(&h, effective, r, None)?.reduced();
    println!("{label:<12} {s}");
    println!("{:<12} first terms {:?}", "", s.expand_univariate(8)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p2 = Fan::projective_space(2);
    show(&p2, vec![rat(0), rat(0), rat(1)], true, 1, "P2, H")?;
    show(&p2, vec![rat(0), rat(0), ratio(1, 2)], false, 2, "P2, H/2")?;
    show(&Fan::hirzebruch(2), vec![rat(1), rat(2), rat(0), rat(0)], true, 2, "F2, 2E + f")?;
    Ok(())
}
