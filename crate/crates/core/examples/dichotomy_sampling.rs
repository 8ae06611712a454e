//! Random configurations of delta(d) points: forbidden, determined, or free.
//!
//! Usage: `dichotomy_sampling [degree] [trials] [seed]`.

use critpoint::linsys::dichotomy_experiment;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let degrees: Vec<i64> = match args.first() {
        Some(&d) => vec![d as i64],
        None => vec![3, 4],
    };
    let trials = args.get(1).copied().unwrap_or(50) as usize;
    let seed = args.get(2).copied().unwrap_or(0);
    for d in degrees {
        let s = dichotomy_experiment(d, trials, seed).unwrap();
        println!(
            "d={d} trials={trials} seed={seed}: {}",
            serde_json::to_string(&s).unwrap()
        );
    }
}
