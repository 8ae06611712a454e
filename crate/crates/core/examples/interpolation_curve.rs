//! Where can a seventh critical point go? The interpolation sextic of six points.

use critpoint::cli::structural_candidates;
use critpoint::interpcurve::{curve_divisibility_report, interpolation_curve};
use critpoint::linsys::PointConfig;

fn show(name: &str, pts: &[(i64, i64)]) {
    let p0 = PointConfig::from_ints(pts).unwrap();
    let curve = interpolation_curve(4, &p0).unwrap();
    println!(
        "{name}: degree {:?} (bound {})",
        curve.degree(),
        curve.degree_bound
    );
    let report = curve_divisibility_report(&curve, &structural_candidates(&p0)).unwrap();
    for r in report {
        println!("  {:<24} divides: {}", r.candidate.to_string(), r.divides);
    }
}

fn main() {
    show(
        "generic",
        &[(0, 0), (3, 1), (-2, 5), (1, -4), (7, 2), (-3, -3)],
    );
    show(
        "3+2 on parallel lines",
        &[(0, 0), (0, 2), (0, -1), (1, 1), (1, 3), (3, 5)],
    );
    show(
        "on a circle",
        &[(5, 0), (-5, 0), (0, 5), (3, 4), (4, -3), (-3, -4)],
    );
}
