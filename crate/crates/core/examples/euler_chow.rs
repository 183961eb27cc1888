//! Euler-Chow series of projective spaces and Hirzebruch surfaces.

use zariski_series::toric::{euler_chow_divisors, euler_chow_points, euler_chow_rank_one, euler_chow_top, Fan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        let fan = Fan::projective_space(n);
        for p in 0..=n {
            println!("P{n}, dim {p}: {}", euler_chow_rank_one(&fan, p, true)?);
        }
    }
    for a in 1..=3 {
        let fan = Fan::hirzebruch(a);
        println!("F{a}: points {}", euler_chow_points(&fan));
        println!("F{a}: curves {}", euler_chow_divisors(&fan)?);
        println!("F{a}: top    {}", euler_chow_top(&fan));
    }
    Ok(())
}
