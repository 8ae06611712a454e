//! Inputs with denominators far beyond `f64` precision, pushed through every
//! exact path. Any hidden float rounding would collapse `1 + ε` to `1`.

use critpoint::cubic::{classify_cubic, isotropy_order, normalize_quadrilateral};
use critpoint::exactcore::serial::{parse_rational, rational_to_string};
use critpoint::exactcore::{BivarPoly, FieldElem, Point, Rational};
use critpoint::interpcurve::interpolation_curve;
use critpoint::linsys::{solve_linear_system, verify_containment, PointConfig};
use critpoint::multiplicity::{intersection_multiplicity, milnor_number, MultiplicityResult};
use critpoint::pencil::{
    hamiltonian_potential, linearization_spectrum, GridConfig, VectorFieldPoly,
};
use num_bigint::BigInt;

fn eps() -> FieldElem {
    FieldElem::real(Rational::new(BigInt::from(1), BigInt::from(10).pow(40)))
}

fn near(k: i64) -> FieldElem {
    &FieldElem::int(k) + &eps()
}

#[test]
fn scalars_round_trip() {
    let e = eps();
    let s = rational_to_string(&near(1).re);
    assert_eq!(parse_rational(&s).unwrap(), near(1).re);
    assert_ne!(near(1), FieldElem::one());
    assert_eq!(
        &(&near(1) - &FieldElem::one()) * &FieldElem::int(10).pow(40),
        FieldElem::one()
    );
    assert_eq!(e.inv().unwrap(), FieldElem::int(10).pow(40));
}

#[test]
fn linear_systems_see_the_perturbation() {
    let exact = PointConfig::new(vec![
        (FieldElem::zero(), FieldElem::zero()),
        (FieldElem::one(), FieldElem::zero()),
        (FieldElem::zero(), FieldElem::one()),
        (FieldElem::one(), FieldElem::one()),
    ])
    .unwrap();
    let nudged = exact
        .map_points(|p| {
            if p == &(FieldElem::one(), FieldElem::one()) {
                (near(1), FieldElem::one())
            } else {
                p.clone()
            }
        })
        .unwrap();
    assert_eq!(solve_linear_system(3, &exact).unwrap().proj_dim, 1);
    let sys = solve_linear_system(3, &nudged).unwrap();
    assert_eq!(sys.proj_dim, 0);
    assert!(verify_containment(&sys.basis[0], &nudged));
}

#[test]
fn cubic_classification_sees_the_perturbation() {
    let q: Point = (near(1), near(1));
    let p = PointConfig::new(vec![
        (FieldElem::zero(), FieldElem::zero()),
        (FieldElem::one(), FieldElem::zero()),
        (FieldElem::zero(), FieldElem::one()),
        q,
    ])
    .unwrap();
    let c = classify_cubic(&p).unwrap();
    assert!(!c.on_arrangement);
    // off the rhombus locus, the symmetry drops to the diagonal reflection
    assert_eq!(isotropy_order(&p).unwrap(), 2);
    let n = normalize_quadrilateral(&p).unwrap();
    assert!(n.images.iter().any(|(_, img)| img == &(near(1), near(1))));
}

#[test]
fn multiplicity_at_a_tiny_offset() {
    let e = eps();
    let x = &BivarPoly::x() - &BivarPoly::constant(e.clone());
    let y = BivarPoly::y();
    let f = &y.pow(2) - &x.pow(3);
    let at = (e.clone(), FieldElem::zero());
    assert_eq!(
        intersection_multiplicity(&y.pow(2), &x.pow(3), &at),
        MultiplicityResult::Finite(6)
    );
    assert_eq!(milnor_number(&f, &at), MultiplicityResult::Finite(2));
    assert_eq!(
        intersection_multiplicity(&y, &x, &(FieldElem::zero(), FieldElem::zero())),
        MultiplicityResult::Finite(0)
    );
}

#[test]
fn pencils_and_potentials() {
    let g = GridConfig::new(
        vec![FieldElem::zero(), eps()],
        vec![FieldElem::zero(), FieldElem::one()],
    )
    .unwrap();
    let f = critpoint::pencil::grid_polynomial_family(&g, &FieldElem::one(), &FieldElem::one())
        .unwrap();
    let field = VectorFieldPoly::hamiltonian_of(&f);
    assert_eq!(hamiltonian_potential(&field).unwrap(), f);
    for p in g.points() {
        let s = linearization_spectrum(&field, &p).unwrap();
        assert!(s.trace.is_zero());
        assert!(!s.det.is_zero());
    }
}

#[test]
fn interpolation_curve_with_tiny_coordinates() {
    let base: Vec<Point> = [(0, 0), (3, 1), (-2, 5), (1, -4), (7, 2)]
        .iter()
        .map(|&(a, b)| (FieldElem::int(a), FieldElem::int(b)))
        .chain([(eps(), near(-3))])
        .collect();
    let p0 = PointConfig::new(base).unwrap();
    let c = interpolation_curve(4, &p0).unwrap();
    for q in p0.points() {
        assert!(c.poly.evaluate(q).is_zero());
    }
}

/// Float types appear only in the renderer and the one conversion it uses.
#[test]
fn floats_stay_in_the_renderer() {
    let src = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("src");
    let mut stack = vec![src.clone()];
    let mut offenders = Vec::new();
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
                continue;
            }
            let rel = path
                .strip_prefix(&src)
                .unwrap()
                .to_string_lossy()
                .replace('\\', "/");
            if rel == "cli/svg.rs" {
                continue;
            }
            let text = std::fs::read_to_string(&path).unwrap();
            for (n, line) in text.lines().enumerate() {
                let allowed = rel == "exactcore/field.rs"
                    && (line.contains("fn rational_to_f64") || line.contains("to_f64()"));
                if (line.contains("f64") || line.contains("f32")) && !allowed {
                    offenders.push(format!("{rel}:{}", n + 1));
                }
            }
        }
    }
    assert!(offenders.is_empty(), "{offenders:?}");
}
