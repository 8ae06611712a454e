//! Pencils of vector fields sharing their zeros, and which members are Hamiltonian.

use critpoint::exactcore::{ipt, BivarPoly, FieldElem};
use critpoint::interpcurve::{horizontal_lines, vertical_lines};
use critpoint::pencil::{
    hamiltonian_slice, linearization_spectrum, rotated_family_reducibility_check,
    unit_grid_potential, VectorFieldPoly,
};

fn ints(v: &[i64]) -> Vec<FieldElem> {
    v.iter().map(|&k| FieldElem::int(k)).collect()
}

fn main() {
    let px = vertical_lines(&ints(&[-1, 0, 2]));
    let py = horizontal_lines(&ints(&[0, 1, 3]));
    let (x, y) = (BivarPoly::x(), BivarPoly::y());
    let families = [
        ("grid", px.clone(), py.clone()),
        ("complete intersection", &y - &px, &x - &py),
        ("hyperelliptic", &y.pow(2) - &px, &x.pow(2) - &py),
    ];
    for (name, f, g) in families {
        let s = hamiltonian_slice(&f, &g);
        println!("{name:<22} slice dim {}: {:?}", s.dim, s.basis);
    }

    let f = unit_grid_potential();
    println!("potential {f}");
    let field = VectorFieldPoly::hamiltonian_of(&f);
    for p in [ipt(0, 0), ipt(1, 0), ipt(0, 1), ipt(1, 1)] {
        let s = linearization_spectrum(&field, &p).unwrap();
        println!(
            "  at ({}, {}): l^2 - ({})l + ({})  {:?}",
            p.0, p.1, s.trace, s.det, s.kind
        );
    }
    println!(
        "6(f + 1/6) factors as a line times a conic: {}",
        rotated_family_reducibility_check()
    );
}
