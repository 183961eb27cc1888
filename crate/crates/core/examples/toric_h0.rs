//! Sections and fixed parts of torus-invariant divisors, and the divisor class group.

use zariski_series::exact::{rat, ratio};
use zariski_series::toric::{divisor_class_group, fixed_part_toric, h0_toric, Fan, ToricDivisor};
use zariski_series::zariski::asymptotic_fixed_part;
use zariski_series::toric::ToricFixedPart;
use zariski_series::RatVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p2 = Fan::projective_space(2);
    for k in 0..5 {
        println!("P2: h0({k} D3) = {}", h0_toric(&p2, &ToricDivisor::from_i64(&[0, 0, k]))?);
    }

    let f2 = Fan::hirzebruch(2);
    let g = divisor_class_group(&f2)?;
    println!("F2: class group rank {} torsion {:?}, basis {:?}", g.rank(), g.torsion(), g.basis_names());
    for i in 0..f2.num_rays() {
        println!("F2: [D{}] = {:?}", i + 1, g.ray_class(i));
    }
    let d = ToricDivisor::from_i64(&[1, 2, 0, 0]);
    println!("F2: h0(D1 + 2 D2) = {}, fixed part {}", h0_toric(&f2, &d)?, RatVector::new(fixed_part_toric(&f2, &d)?.coeffs().to_vec()));

    let q = RatVector::new(vec![rat(0), ratio(3, 2), rat(0), rat(0)]);
    for (n, f) in asymptotic_fixed_part(&ToricFixedPart { fan: &f2 }, &q, 6)? {
        println!("F2: F(|{n} * 3/2 D2|) / {n} = {f}");
    }
    Ok(())
}
