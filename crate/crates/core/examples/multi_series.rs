//! Multigraded series of h0 over several big divisors on F2, assembled from chambers.

use zariski_series::series::{chamber_reduced_series, SeriesOptions};
use zariski_series::toric::{surface_lattice_from_fan, Fan, ToricClassOracle};
use zariski_series::Divisor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fan = Fan::hirzebruch(2);
    let s = surface_lattice_from_fan(&fan)?;
    let h = ToricClassOracle::new(&fan)?;
    let opts = SeriesOptions::default();
    for (d, bigs) in [("0", vec!["2 D2 + D1"]), ("0", vec!["D2 + D1", "D2 + 3 D1"]), ("-D4", vec!["D2 + D1"])] {
        let base = s.parse_divisor(d)?;
        let bs: Vec<Divisor> = bigs.iter().map(|b| s.parse_divisor(b)).collect::<Result<_, _>>()?;
        let out = chamber_reduced_series(&s, &base, &bs, &h, &opts)?;
        println!("D = {d}, big divisors {bigs:?}");
        println!("  series  {}", out.series);
        for p in &out.pieces {
            println!("  piece   chamber {:?} simplex {:?} sign {} shifts {:?}", p.gamma, p.simplex, p.coefficient, p.shifts);
        }
    }
    Ok(())
}
