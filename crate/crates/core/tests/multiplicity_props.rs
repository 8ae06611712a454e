mod common;

use critpoint::exactcore::{ipt, BivarPoly, FieldElem, Point};
use critpoint::linsys::Lcg;
use critpoint::multiplicity::{intersection_multiplicity, milnor_number, MultiplicityResult};
use proptest::prelude::*;

use common::{local_algebra_dim, random_poly};

use MultiplicityResult::{Finite, Infinity};

/// Polynomials through the origin, low degree.
fn through_origin() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..=4), 1..5).prop_map(|t| {
        let t: Vec<_> = t.into_iter().filter(|&(i, j, _)| i + j > 0).collect();
        BivarPoly::from_int_terms(&t)
    })
}

fn small() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..=4), 0..4)
        .prop_map(|t| BivarPoly::from_int_terms(&t))
}

fn origin() -> Point {
    ipt(0, 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn symmetric(f in through_origin(), g in through_origin()) {
        prop_assert_eq!(intersection_multiplicity(&f, &g, &origin()), intersection_multiplicity(&g, &f, &origin()));
    }

    #[test]
    fn invariant_under_adding_multiples(f in through_origin(), g in through_origin(), a in small()) {
        let g2 = &g + &(&a * &f);
        prop_assert_eq!(intersection_multiplicity(&f, &g, &origin()), intersection_multiplicity(&f, &g2, &origin()));
    }

    #[test]
    fn additive(f in through_origin(), g in through_origin(), h in through_origin()) {
        let lhs = intersection_multiplicity(&f, &(&g * &h), &origin());
        let rhs = match (intersection_multiplicity(&f, &g, &origin()), intersection_multiplicity(&f, &h, &origin())) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinity,
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_iff_a_curve_misses(f in small(), g in small(), p in (-2i64..=2, -2i64..=2)) {
        let p = ipt(p.0, p.1);
        let m = intersection_multiplicity(&f, &g, &p);
        let misses = !f.evaluate(&p).is_zero() || !g.evaluate(&p).is_zero();
        prop_assert_eq!(m == Finite(0), misses);
    }

    #[test]
    fn agrees_with_local_algebra(f in through_origin(), g in through_origin()) {
        if let Finite(m) = intersection_multiplicity(&f, &g, &origin()) {
            let z = FieldElem::zero().re;
            prop_assert_eq!(local_algebra_dim(&f, &g, &z, &z, 64), Some(m as usize));
        }
    }

    #[test]
    fn translation_invariant(f in through_origin(), g in through_origin(), p in (-3i64..=3, -3i64..=3)) {
        // move the origin to p
        let t = critpoint::exactcore::AffineMap::translation(FieldElem::int(-p.0), FieldElem::int(-p.1));
        let (ft, gt) = (f.affine_pullback(&t), g.affine_pullback(&t));
        prop_assert_eq!(intersection_multiplicity(&ft, &gt, &ipt(p.0, p.1)), intersection_multiplicity(&f, &g, &origin()));
    }
}

#[test]
fn transverse_axes() {
    assert_eq!(
        intersection_multiplicity(&BivarPoly::x(), &BivarPoly::y(), &origin()),
        Finite(1)
    );
}

#[test]
fn oracle_on_higher_contact() {
    let mut rng = Lcg::new(99);
    let z = FieldElem::zero().re;
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..200 {
        let f = random_poly(&mut rng, 2, 4, 4);
        let g = random_poly(&mut rng, 2, 4, 4);
        if let Finite(m) = intersection_multiplicity(&f, &g, &origin()) {
            assert_eq!(
                local_algebra_dim(&f, &g, &z, &z, 64),
                Some(m as usize),
                "{f} / {g}"
            );
            seen.insert(m);
        }
    }
    assert!(seen.iter().any(|&m| m >= 6), "{seen:?}");
}

/// Products of lines in general position meet in `deg F · deg G` rational points.
#[test]
fn bezout_for_line_arrangements() {
    let mut rng = Lcg::new(5);
    for _ in 0..10 {
        let lines: Vec<(i64, i64, i64)> = (0..5)
            .map(|_| (rng.int_in(-5, 5), rng.int_in(-5, 5), rng.int_in(-5, 5)))
            .collect();
        let line = |&(a, b, c): &(i64, i64, i64)| {
            BivarPoly::from_int_terms(&[(1, 0, a), (0, 1, b), (0, 0, c)])
        };
        let (fl, gl) = lines.split_at(2);
        // skip degenerate draws: parallel, repeated or missing lines
        let ok = lines.iter().all(|l| l.0 != 0 || l.1 != 0)
            && fl.iter().all(|a| gl.iter().all(|b| a.0 * b.1 != a.1 * b.0));
        if !ok {
            continue;
        }
        let f = fl
            .iter()
            .map(line)
            .fold(BivarPoly::one(), |acc, l| &acc * &l);
        let g = gl
            .iter()
            .map(line)
            .fold(BivarPoly::one(), |acc, l| &acc * &l);
        let mut points = std::collections::BTreeSet::new();
        for a in fl {
            for b in gl {
                let det = FieldElem::int(a.0 * b.1 - a.1 * b.0);
                let x = &FieldElem::int(a.1 * b.2 - a.2 * b.1) / &det;
                let y = &FieldElem::int(a.2 * b.0 - a.0 * b.2) / &det;
                points.insert((x, y));
            }
        }
        let total: u64 = points
            .iter()
            .map(|p| {
                intersection_multiplicity(&f, &g, p)
                    .finite()
                    .expect("no common line")
            })
            .sum();
        assert_eq!(total, 6);
    }
}

#[test]
fn milnor_of_simple_singularities() {
    let o = origin();
    // A_k: x² + y^{k+1}
    for k in 1..6u32 {
        let f = BivarPoly::from_int_terms(&[(2, 0, 1), (0, k + 1, 1)]);
        assert_eq!(milnor_number(&f, &o), Finite(k as u64));
    }
    // D_4: x²y − y³; E_6: x³ + y⁴
    assert_eq!(
        milnor_number(&BivarPoly::from_int_terms(&[(2, 1, 1), (0, 3, -1)]), &o),
        Finite(4)
    );
    assert_eq!(
        milnor_number(&BivarPoly::from_int_terms(&[(3, 0, 1), (0, 4, 1)]), &o),
        Finite(6)
    );
    // x²: a line of critical points
    assert_eq!(
        milnor_number(&BivarPoly::from_int_terms(&[(2, 0, 1)]), &o),
        Infinity
    );
}
