//! Parsing and expanding canonical series, and fitting quasi-polynomials to counts.

use zariski_series::series::{quasi_poly_fit, RationalSeries};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = RationalSeries::parse("(1 + x*y) / (1 - x*y^2) * (1 - x)", None)?;
    println!("series {s}");
    for (m, c) in s.expand(4, None)? {
        println!("  {m:?} : {c}");
    }

    let laurent = RationalSeries::parse("1 / (1 - t3)^2 * (1 - t4) * (1 - t3^-2*t4)", None)?;
    let coeffs = laurent.expand(3, Some(&[1, 3]))?;
    println!("{laurent} has {} terms of weighted degree <= 3", coeffs.len());

    // Lattice points of the triangle with vertices (0,0), (n/2,0), (0,n/2).
    let values: Vec<i64> = (0..30).map(|n| (n / 2 + 1) * (n / 2 + 2) / 2).collect();
    let q = quasi_poly_fit(&values, 4)?;
    println!("{q}");
    Ok(())
}
