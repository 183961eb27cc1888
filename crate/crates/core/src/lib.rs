//! Exact Zariski decompositions on surfaces and multigraded section-ring
//! series of big divisors.

pub mod exact;
pub mod surface;
pub mod zariski;
pub mod cli;
pub mod cones;
pub mod series;
pub mod random;
pub mod io;
pub mod toric;

pub use exact::{RatMatrix, RatVector, Rational};
pub use surface::{Divisor, SurfaceLattice};
pub use zariski::{zariski_decompose, ZariskiPair};
