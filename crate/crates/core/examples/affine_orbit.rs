//! The 24 ways to normalize a quadrilateral, and its affine isotropy.

use critpoint::cubic::normalize_quadrilateral;
use critpoint::exactcore::serial::rational_to_string;
use critpoint::linsys::PointConfig;

fn main() {
    for (x, y) in [(2, 2), (1, 1), (5, -3)] {
        let p = PointConfig::from_ints(&[(0, 0), (1, 0), (0, 1), (x, y)]).unwrap();
        let n = normalize_quadrilateral(&p).unwrap();
        let distinct = n.distinct_images();
        println!(
            "fourth point ({x}, {y}): {} distinct images, isotropy {}",
            distinct.len(),
            24 / distinct.len()
        );
        let shown: Vec<String> = distinct
            .iter()
            .map(|(a, b)| {
                format!(
                    "({}, {})",
                    rational_to_string(&a.re),
                    rational_to_string(&b.re)
                )
            })
            .collect();
        println!("  {}", shown.join(" "));
    }
}
