//! SVG of the six-line arrangement, the rhombus configuration and a level curve.
//!
//! Usage: `plot_arrangement [out.svg]`.

use critpoint::cli::parse_job;
use critpoint::cli::svg::{render_svg, PlotPayload};
use critpoint::exactcore::{ipt, BivarPoly, Rational};

fn main() {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "arrangement.svg".into());
    let job = parse_job(["plot", "--output", out.as_str(), "--resolution", "256"]).unwrap();
    let f = BivarPoly::from_int_terms(&[(3, 0, 2), (2, 0, -3), (0, 3, 2), (0, 2, -3)]);
    let payload = PlotPayload {
        level_curves: vec![(f, Rational::default())],
        points: vec![ipt(0, 0), ipt(1, 0), ipt(0, 1), ipt(1, 1)],
        arrangement: true,
        convexity: true,
    };
    let svg = render_svg(&job, &payload).unwrap();
    std::fs::write(&out, &svg).unwrap();
    println!("wrote {out} ({} bytes)", svg.len());
}
