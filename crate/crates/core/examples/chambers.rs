//! Zariski chambers of the big cone of F2, and the decomposition inside each.

use zariski_series::cones::{zariski_chambers, RationalCone};
use zariski_series::exact::RatMatrix;
use zariski_series::{zariski_decompose, Divisor, RatVector, SurfaceLattice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f2 = SurfaceLattice::new(
        vec!["E".into(), "f".into()],
        RatMatrix::from_i64_rows(&[&[-2, 1], &[1, 0]])?,
        vec![("E".into(), RatVector::from_i64(&[1, 0])), ("f".into(), RatVector::from_i64(&[0, 1]))],
    )?;
    // E + f and E + 3f straddle the nef boundary E + 2f.
    let w = RationalCone::from_generators(2, &[RatVector::from_i64(&[1, 1]), RatVector::from_i64(&[1, 3])])?;
    for c in zariski_chambers(&f2, &w)? {
        let names: Vec<&str> = c.gamma.iter().map(|&i| f2.labels()[i].as_str()).collect();
        let p = c.cone.interior_point();
        let z = zariski_decompose(&f2, &Divisor::new(p.clone()))?;
        println!(
            "gamma = {{{}}} rays = {:?} interior point {} has N = {}",
            names.join(", "),
            c.cone.rays().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            f2.format_divisor(&Divisor::new(p)),
            f2.format_divisor(&z.negative)
        );
    }
    Ok(())
}
