//! Local intersection multiplicities and Milnor numbers.

use critpoint::exactcore::{ipt, BivarPoly, FieldElem};
use critpoint::multiplicity::{intersection_multiplicity, is_morse_point, milnor_number};
use critpoint::pencil::{grid_polynomial_family, GridConfig};

fn main() {
    let o = ipt(0, 0);
    let cusp = BivarPoly::from_int_terms(&[(0, 2, 1), (3, 0, -1)]);
    println!("y^2 - x^3: Milnor number {}", milnor_number(&cusp, &o));
    println!(
        "I(y^2, x^3) = {}",
        intersection_multiplicity(&BivarPoly::y().pow(2), &BivarPoly::x().pow(3), &o)
    );

    let vertex_limit = BivarPoly::from_int_terms(&[
        (3, 0, 2),
        (0, 3, 2),
        (2, 1, -6),
        (1, 2, -6),
        (2, 0, -3),
        (0, 2, -3),
        (1, 1, 6),
    ]);
    println!(
        "vertex-limit cubic at the origin: {}",
        milnor_number(&vertex_limit, &o)
    );
    println!(
        "x^2 (a line of critical points): {}",
        milnor_number(&BivarPoly::x().pow(2), &o)
    );

    let g = GridConfig::from_ints(&[0, 1, 2], &[0, 1, 2]).unwrap();
    let f = grid_polynomial_family(&g, &FieldElem::one(), &FieldElem::one()).unwrap();
    let total: u64 = g
        .points()
        .iter()
        .map(|p| milnor_number(&f, p).finite().unwrap())
        .sum();
    let morse = g.points().iter().all(|p| is_morse_point(&f, p).unwrap());
    println!("3x3 grid potential: total {total}, all Morse: {morse}");
}
