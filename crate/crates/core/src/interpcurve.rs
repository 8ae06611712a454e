//! Interpolation curves: for even ambient dimension, the determinant of the
//! square interpolation matrix as a polynomial in one free point.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactcore::{BivarPoly, Degree, FieldElem, Point, UniPoly};
use crate::linsys::{ambient_dimension, delta, phi_from_points, PointConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterpolationCurve {
    pub poly: BivarPoly,
    pub degree_bound: u32,
    pub base_config: PointConfig,
}

impl InterpolationCurve {
    pub fn degree(&self) -> Option<u32> {
        self.poly.degree().finite()
    }
}

fn check_curve_input(d: i64, p0: &PointConfig) -> Result<u32> {
    let amb = ambient_dimension(d)?;
    let need = delta(d)? as usize - 1;
    if amb % 2 == 1 {
        return Err(Error::OddAmbientDimension(amb));
    }
    if p0.len() != need {
        return Err(Error::WrongPointCount {
            expected: need,
            got: p0.len(),
        });
    }
    Ok(d as u32)
}

/// `det φ(d, p0 ∪ {q})` with the free point `q` in the last two rows.
pub fn curve_value(d: i64, p0: &PointConfig, q: &Point) -> Result<FieldElem> {
    let d = check_curve_input(d, p0)?;
    Ok(value_at(d, p0, q))
}

fn value_at(d: u32, p0: &PointConfig, q: &Point) -> FieldElem {
    let mut pts = p0.points().to_vec();
    pts.push(q.clone());
    phi_from_points(d, &pts)
        .determinant()
        .expect("interpolation matrix is square")
}

/// The interpolation curve of `p0`, recovered from its values on the grid
/// `{0, …, 2d−2}²` by separable Newton interpolation (x first, then y).
///
/// Nodes that coincide with a base point are kept; the determinant there is 0.
pub fn interpolation_curve(d: i64, p0: &PointConfig) -> Result<InterpolationCurve> {
    let du = check_curve_input(d, p0)?;
    let bound = 2 * du - 2;
    let nodes: Vec<FieldElem> = (0..=bound as i64).map(FieldElem::int).collect();
    // rows[j] = x-interpolant along y = nodes[j]
    let rows: Vec<UniPoly> = nodes
        .iter()
        .map(|y| {
            let vals: Vec<FieldElem> = nodes
                .iter()
                .map(|x| value_at(du, p0, &(x.clone(), y.clone())))
                .collect();
            UniPoly::interpolate(&nodes, &vals)
        })
        .collect();
    let mut terms = Vec::new();
    for a in 0..=bound as usize {
        let column: Vec<FieldElem> = rows.iter().map(|r| r.coeff(a)).collect();
        let in_y = UniPoly::interpolate(&nodes, &column);
        for (b, c) in in_y.coeffs().iter().enumerate() {
            terms.push(((a as u32, b as u32), c.clone()));
        }
    }
    let poly = BivarPoly::from_terms(terms);
    if let Degree::Finite(got) = poly.degree() {
        if got > bound {
            return Err(Error::DegreeBoundViolated { got, bound });
        }
    }
    Ok(InterpolationCurve {
        poly,
        degree_bound: bound,
        base_config: p0.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divisibility {
    pub candidate: BivarPoly,
    pub divides: bool,
    pub quotient: Option<BivarPoly>,
}

/// Exact division of the curve by each candidate.
pub fn curve_divisibility_report(
    curve: &InterpolationCurve,
    candidates: &[BivarPoly],
) -> Result<Vec<Divisibility>> {
    candidates
        .iter()
        .map(|c| {
            let quotient = curve.poly.exact_divide(c)?;
            Ok(Divisibility {
                candidate: c.clone(),
                divides: quotient.is_some(),
                quotient,
            })
        })
        .collect()
}

/// `Π (x − r)` for the given roots, as a polynomial in `x`.
pub fn vertical_lines(roots: &[FieldElem]) -> BivarPoly {
    BivarPoly::from_univariate(&UniPoly::from_roots(roots), crate::exactcore::Var::X)
}

/// `Π (y − r)` for the given roots, as a polynomial in `y`.
pub fn horizontal_lines(roots: &[FieldElem]) -> BivarPoly {
    BivarPoly::from_univariate(&UniPoly::from_roots(roots), crate::exactcore::Var::Y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::ipt;
    use crate::linsys::solve_linear_system;

    fn ints(v: &[i64]) -> Vec<FieldElem> {
        v.iter().map(|&k| FieldElem::int(k)).collect()
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = PointConfig::from_ints(&[(0, 0)]).unwrap();
        assert_eq!(
            interpolation_curve(3, &p).unwrap_err(),
            Error::OddAmbientDimension(9)
        );
        assert_eq!(
            interpolation_curve(4, &p).unwrap_err(),
            Error::WrongPointCount {
                expected: 6,
                got: 1
            }
        );
    }

    #[test]
    fn two_parallel_lines_plus_one() {
        let p0 =
            PointConfig::from_ints(&[(0, 0), (0, 2), (0, -1), (1, 1), (1, 3), (3, 5)]).unwrap();
        let curve = interpolation_curve(4, &p0).unwrap();
        assert!(curve.degree().unwrap() <= 6);
        for q in p0.points() {
            assert!(curve.poly.evaluate(q).is_zero());
        }
        let lines = vertical_lines(&ints(&[0, 1, 3]));
        let report = curve_divisibility_report(&curve, &[lines, BivarPoly::one()]).unwrap();
        assert!(report[0].divides);
        assert_eq!(report[1].quotient.as_ref(), Some(&curve.poly));
    }

    #[test]
    fn matches_direct_determinant_and_linsys() {
        let p0 =
            PointConfig::from_ints(&[(0, 0), (3, 1), (-2, 5), (1, -4), (7, 2), (-3, -3)]).unwrap();
        let curve = interpolation_curve(4, &p0).unwrap();
        assert_eq!(curve.degree(), Some(6));
        for q in [ipt(11, -7), ipt(-5, 9), ipt(4, 4)] {
            let direct = curve_value(4, &p0, &q).unwrap();
            assert_eq!(curve.poly.evaluate(&q), direct);
            let sys = solve_linear_system(4, &p0.with_point(q).unwrap()).unwrap();
            assert_eq!(direct.is_zero(), sys.proj_dim >= 0);
        }
        let big = BivarPoly::from_int_terms(&[(7, 0, 1)]);
        assert!(!curve_divisibility_report(&curve, &[big]).unwrap()[0].divides);
    }
}
