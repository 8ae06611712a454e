//! Interpolation thresholds: how many critical points pin down a polynomial of degree d.

use critpoint::linsys::{ambient_dimension, delta};

fn main() {
    println!("{:>3} {:>6} {:>6} {:>6}", "d", "dim", "delta", "parity");
    for d in 3..=10 {
        let amb = ambient_dimension(d).unwrap();
        let parity = if amb % 2 == 0 { "even" } else { "odd" };
        println!("{d:>3} {amb:>6} {:>6} {parity:>6}", delta(d).unwrap());
    }
}
