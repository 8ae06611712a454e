//! The unit square as a critical configuration: a pencil of cubics.

use critpoint::exactcore::FieldElem;
use critpoint::linsys::{solve_linear_system, verify_containment, PointConfig};

fn main() {
    let p = PointConfig::from_ints(&[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
    let sys = solve_linear_system(3, &p).unwrap();
    println!(
        "rank {}, projective dimension {}",
        sys.phi_rank, sys.proj_dim
    );
    for f in &sys.basis {
        println!("  basis: {f}");
    }
    // a·f1 + d·f2 for a few (a, d)
    for (a, d) in [(1, 1), (1, -1), (2, 3)] {
        let f = &sys.basis[0].scale(&FieldElem::int(a)) + &sys.basis[1].scale(&FieldElem::int(d));
        assert!(verify_containment(&f, &p));
        println!("  a={a}, d={d}: {f}");
    }
}
