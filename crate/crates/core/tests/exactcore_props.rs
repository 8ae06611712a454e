mod common;

use critpoint::exactcore::serial::{parse_rational, rational_to_string};
use critpoint::exactcore::{
    bivariate_gcd, AffineMap, BivarPoly, Degree, FieldElem, Point, QMatrix, Rational,
};
use critpoint::linsys::{phi_from_points, Lcg};
use num_bigint::BigInt;
use proptest::prelude::*;

fn frac() -> impl Strategy<Value = FieldElem> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| FieldElem::frac(n, d))
}

fn gaussian() -> impl Strategy<Value = FieldElem> {
    (frac(), frac()).prop_map(|(a, b)| FieldElem::new(a.re, b.re))
}

fn point() -> impl Strategy<Value = Point> {
    (frac(), frac())
}

fn poly() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((0u32..4, 0u32..4, -5i64..=5), 0..6)
        .prop_map(|t| BivarPoly::from_int_terms(&t))
}

fn nonzero_poly() -> impl Strategy<Value = BivarPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn int_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, n), n).prop_map(|rows| {
        QMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(FieldElem::int).collect())
                .collect(),
        )
    })
}

fn affine() -> impl Strategy<Value = AffineMap> {
    (frac(), frac(), frac(), frac(), frac(), frac())
        .prop_filter_map("singular", |(a, b, c, d, e, f)| {
            AffineMap::new([[a, b], [c, d]], (e, f)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a - &a), &BivarPoly::zero());
    }

    #[test]
    fn degree_is_additive(a in nonzero_poly(), b in nonzero_poly()) {
        let (Degree::Finite(da), Degree::Finite(db)) = (a.degree(), b.degree()) else {
            return Err(TestCaseError::fail("nonzero polynomial without degree"));
        };
        prop_assert_eq!((&a * &b).degree(), Degree::Finite(da + db));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        prop_assert_eq!((&a * &b).evaluate(&p), &a.evaluate(&p) * &b.evaluate(&p));
        prop_assert_eq!((&a + &b).evaluate(&p), &a.evaluate(&p) + &b.evaluate(&p));
    }

    #[test]
    fn pullback_respects_evaluation(f in poly(), t in affine(), q in point()) {
        prop_assert_eq!(f.affine_pullback(&t).evaluate(&q), f.evaluate(&t.apply(&q)));
    }

    #[test]
    fn pullback_composes(f in poly(), s in affine(), t in affine()) {
        // (f∘s)∘t = f∘(s∘t)
        prop_assert_eq!(f.affine_pullback(&s).affine_pullback(&t), f.affine_pullback(&s.compose(&t)));
    }

    #[test]
    fn affine_inverse(t in affine(), q in point()) {
        prop_assert_eq!(t.inverse().apply(&t.apply(&q)), q);
    }

    #[test]
    fn exact_divide_round_trip(a in poly(), b in nonzero_poly()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), Some(a.clone()));
        if let Some(q) = a.exact_divide(&b).unwrap() {
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = bivariate_gcd(&ac, &bc);
        prop_assert!(ac.exact_divide(&g).unwrap().is_some());
        prop_assert!(bc.exact_divide(&g).unwrap().is_some());
        prop_assert!(g.exact_divide(&c).unwrap().is_some());
    }

    #[test]
    fn derivative_product_rule(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).dx(), &(&a.dx() * &b) + &(&a * &b.dx()));
        prop_assert_eq!((&a * &b).dy(), &(&a.dy() * &b) + &(&a * &b.dy()));
    }

    #[test]
    fn determinant_is_multiplicative(m in int_matrix(5), u in int_matrix(5)) {
        let du = u.determinant().unwrap();
        prop_assume!(!du.is_zero());
        prop_assert_eq!(u.mul(&m).determinant().unwrap(), &du * &m.determinant().unwrap());
    }

    #[test]
    fn determinant_matches_cofactor_oracle(m in int_matrix(6)) {
        prop_assert_eq!(m.determinant().unwrap(), common::laplace_det(&m.row_vecs()));
    }

    #[test]
    fn gaussian_determinant_matches_oracle(rows in prop::collection::vec(prop::collection::vec(gaussian(), 4), 4)) {
        let m = QMatrix::from_rows(rows);
        prop_assert_eq!(m.determinant().unwrap(), common::laplace_det(&m.row_vecs()));
    }

    #[test]
    fn nullspace_is_sound(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 7), 1..6)) {
        let m = QMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(FieldElem::int).collect()).collect());
        let rn = m.rank_and_nullspace();
        prop_assert_eq!(rn.rank + rn.basis.len(), m.cols());
        for v in &rn.basis {
            prop_assert!(m.mul_vec(v).iter().all(FieldElem::is_zero));
        }
        let dense = m.row_vecs().into_iter().map(|r| r.into_iter().map(|e| e.re).collect()).collect();
        prop_assert_eq!(rn.rank, common::dense_rank(dense));
    }

    #[test]
    fn polynomial_json_round_trip(f in poly(), c in gaussian()) {
        let g = f.scale(&c);
        let s = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<BivarPoly>(&s).unwrap(), g);
    }
}

#[test]
fn generic_phi_determinant_regression() {
    let mut rng = Lcg::new(4242);
    let pts = rng.int_config(7);
    let phi = phi_from_points(4, pts.points());
    assert_eq!((phi.rows(), phi.cols()), (14, 14));
    let det = phi.determinant().unwrap();
    assert_eq!(det, common::laplace_det(&phi.row_vecs()));
    assert!(!det.is_zero());
    assert_eq!(det.to_string(), PINNED_DET);
}

// frozen from the cofactor oracle
const PINNED_DET: &str = "-16081433410605457342464";

/// Values far below `f64` resolution survive every exact path unchanged.
#[test]
fn tiny_denominators_stay_exact() {
    let tiny = Rational::new(BigInt::from(1), BigInt::from(10).pow(40));
    let e = FieldElem::real(tiny.clone());
    assert_eq!(rational_to_string(&tiny), format!("1/1{}", "0".repeat(40)));
    assert_eq!(parse_rational(&rational_to_string(&tiny)).unwrap(), tiny);
    assert!(!(&(&e + &FieldElem::one()) - &FieldElem::one()).is_zero());

    let f = &BivarPoly::x() - &BivarPoly::constant(e.clone());
    let g = &f * &f;
    assert_eq!(g.exact_divide(&f).unwrap(), Some(f.clone()));
    assert!(g.evaluate(&(e.clone(), FieldElem::zero())).is_zero());
    assert!(!g
        .evaluate(&(FieldElem::zero(), FieldElem::zero()))
        .is_zero());

    let m = QMatrix::from_rows(vec![
        vec![e.clone(), FieldElem::one()],
        vec![FieldElem::one(), FieldElem::one()],
    ]);
    assert_eq!(m.determinant().unwrap(), &e - &FieldElem::one());
    assert_eq!(m.rank(), 2);

    let t = AffineMap::translation(e.clone(), e.clone());
    let q = t.apply(&(FieldElem::zero(), FieldElem::zero()));
    assert_eq!(
        t.inverse().apply(&q),
        (FieldElem::zero(), FieldElem::zero())
    );
    assert_eq!(
        serde_json::from_str::<FieldElem>(&serde_json::to_string(&e).unwrap()).unwrap(),
        e
    );
}
