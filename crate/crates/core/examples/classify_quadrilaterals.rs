//! Cubics through four critical points: which fourth points determine the cubic.
//!
//! Pass a fourth point as `x y` (rationals like `1/3`) to classify it too.

use critpoint::cubic::classify_cubic;
use critpoint::exactcore::serial::parse_rational;
use critpoint::exactcore::{pt, FieldElem, Point};
use critpoint::linsys::PointConfig;

fn report(label: &str, q: Point) {
    let p = PointConfig::new(vec![
        pt((0, 1), (0, 1)),
        pt((1, 1), (0, 1)),
        pt((0, 1), (1, 1)),
        q,
    ])
    .unwrap();
    let c = classify_cubic(&p).unwrap();
    println!("{label:<12} {}", serde_json::to_string(&c).unwrap());
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [x, y] = args.as_slice() {
        let q = (
            FieldElem::real(parse_rational(x).unwrap()),
            FieldElem::real(parse_rational(y).unwrap()),
        );
        report("input", q);
        return;
    }
    report("center", pt((1, 3), (1, 3)));
    report("rhombus", pt((1, 1), (1, 1)));
    report("kite", pt((2, 1), (2, 1)));
    report("trapezoid", pt((2, 1), (1, 1)));
    report("generic", pt((7, 3), (-2, 5)));
    report("collinear", pt((2, 1), (0, 1)));
}
