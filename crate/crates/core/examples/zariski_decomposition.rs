//! Zariski decompositions on the Hirzebruch surface F2 and on P2 blown up at a point.

use zariski_series::exact::RatMatrix;
use zariski_series::zariski::check_axioms;
use zariski_series::{zariski_decompose, RatVector, SurfaceLattice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f2 = SurfaceLattice::new(
        vec!["E".into(), "f".into()],
        RatMatrix::from_i64_rows(&[&[-2, 1], &[1, 0]])?,
        vec![("E".into(), RatVector::from_i64(&[1, 0])), ("f".into(), RatVector::from_i64(&[0, 1]))],
    )?;
    for text in ["2E + f", "E + f", "3E + 5f", "1/2 E + 1/3 f"] {
        let d = f2.parse_divisor(text)?;
        let z = zariski_decompose(&f2, &d)?;
        check_axioms(&f2, &d, &z)?;
        println!("F2: D = {text:<14} P = {} ; N = {}", f2.format_divisor(&z.positive), f2.format_divisor(&z.negative));
    }

    let f1 = SurfaceLattice::new(
        vec!["H".into(), "E".into()],
        RatMatrix::from_i64_rows(&[&[1, 0], &[0, -1]])?,
        vec![("E".into(), RatVector::from_i64(&[0, 1])), ("L".into(), RatVector::from_i64(&[1, -1]))],
    )?;
    let d = f1.parse_divisor("H + 2E")?;
    let z = zariski_decompose(&f1, &d)?;
    println!("F1: D = H + 2E{:<6} P = {} ; N = {}", "", f1.format_divisor(&z.positive), f1.format_divisor(&z.negative));
    Ok(())
}
