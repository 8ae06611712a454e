//! Cubics with four prescribed critical points.
//!
//! Exact work happens in the chart where three of the points are the
//! vertices `(0,0), (1,0), (0,1)` and the fourth point is free.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactcore::field::point_to_string;
use crate::exactcore::{ipt, AffineMap, BivarPoly, FieldElem, Point};
use crate::linsys::{solve_linear_system, verify_containment, PointConfig};
use crate::multiplicity::{critical_set_finite, intersection_multiplicity, MultiplicityResult};

/// Labels of the six lines, in factor order.
pub const LINE_NAMES: [&str; 6] = ["x", "y", "x+y-1", "x+y", "x-1", "y-1"];

/// The six lines `x, y, x+y−1, x+y, x−1, y−1` and their product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementA {
    pub factors: [BivarPoly; 6],
    pub product: BivarPoly,
}

impl ArrangementA {
    pub fn new() -> Self {
        let f = |a: i64, b: i64, c: i64| {
            BivarPoly::linear(FieldElem::int(a), FieldElem::int(b), FieldElem::int(c))
        };
        let factors = [
            f(1, 0, 0),
            f(0, 1, 0),
            f(1, 1, -1),
            f(1, 1, 0),
            f(1, 0, -1),
            f(0, 1, -1),
        ];
        let product = factors.iter().fold(BivarPoly::one(), |acc, l| &acc * l);
        ArrangementA { factors, product }
    }

    /// Indices of the lines through `pt`.
    pub fn lines_through(&self, pt: &Point) -> Vec<usize> {
        (0..6)
            .filter(|&k| self.factors[k].evaluate(pt).is_zero())
            .collect()
    }
}

impl Default for ArrangementA {
    fn default() -> Self {
        ArrangementA::new()
    }
}

/// `x y (x+y−1)(x+y)(x−1)(y−1)` at `pt`.
pub fn arrangement_a_value(pt: &Point) -> FieldElem {
    let (x, y) = pt;
    let one = FieldElem::one();
    let s = x + y;
    [
        x.clone(),
        y.clone(),
        &s - &one,
        s.clone(),
        x - &one,
        y - &one,
    ]
    .iter()
    .fold(FieldElem::one(), |acc, v| &acc * v)
}

/// The unique cubic (up to scale) with critical points at the three vertices
/// and `(x4, y4)`:
///
/// `y4²(y4−1)(2x4+y4−1)(2x³−3x²) + x4²(x4−1)(x4+2y4−1)(2y³−3y²)
///  − 6x4y4(x4−1)(y4−1)(x²y+xy²−xy)`.
pub fn canonical_cubic(x4: &FieldElem, y4: &FieldElem) -> Result<BivarPoly> {
    let q = (x4.clone(), y4.clone());
    if arrangement_a_value(&q).is_zero() {
        return Err(Error::OnArrangement(point_to_string(&q)));
    }
    let one = FieldElem::one();
    let two = FieldElem::int(2);
    let ca = &(&(y4 * y4) * &(y4 - &one)) * &(&(&(&two * x4) + y4) - &one);
    let cb = &(&(x4 * x4) * &(x4 - &one)) * &(&(x4 + &(&two * y4)) - &one);
    let cc = &(&(&FieldElem::int(-6) * x4) * y4) * &(&(x4 - &one) * &(y4 - &one));
    let (px, py, pm) = cubic_generators();
    Ok(&(&px.scale(&ca) + &py.scale(&cb)) + &pm.scale(&cc))
}

/// `2x³−3x²`, `2y³−3y²`, `x²y+xy²−xy`: each has critical points at the three vertices.
pub fn cubic_generators() -> (BivarPoly, BivarPoly, BivarPoly) {
    (
        BivarPoly::from_int_terms(&[(3, 0, 2), (2, 0, -3)]),
        BivarPoly::from_int_terms(&[(0, 3, 2), (0, 2, -3)]),
        BivarPoly::from_int_terms(&[(2, 1, 1), (1, 2, 1), (1, 1, -1)]),
    )
}

/// Twice the signed area of `abc`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> FieldElem {
    let u = (&b.0 - &a.0, &b.1 - &a.1);
    let v = (&c.0 - &a.0, &c.1 - &a.1);
    &(&u.0 * &v.1) - &(&u.1 * &v.0)
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    orientation(a, b, c).is_zero()
}

fn has_collinear_triple(pts: &[Point]) -> bool {
    triples(pts.len()).any(|(a, b, c, _)| a < b && b < c && collinear(&pts[a], &pts[b], &pts[c]))
}

/// All ordered triples of distinct indices of `0..n` with the remaining index
/// (only meaningful for `n = 4`).
fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n).flat_map(move |a| {
        (0..n).flat_map(move |b| {
            (0..n).filter_map(move |c| {
                if a == b || b == c || a == c {
                    return None;
                }
                let d = (0..n).find(|&k| k != a && k != b && k != c).unwrap_or(0);
                Some((a, b, c, d))
            })
        })
    })
}

fn expect_four(p: &PointConfig) -> Result<()> {
    if p.len() != 4 {
        return Err(Error::WrongPointCount {
            expected: 4,
            got: p.len(),
        });
    }
    Ok(())
}

/// The 24 normalizing maps of a quadrilateral and the images of the fourth point.
#[derive(Clone, Debug)]
pub struct Normalization {
    /// One entry per ordered triple `(Pa, Pb, Pc)`: the map sending it to the
    /// standard triangle, and the image of the remaining point.
    pub images: Vec<(AffineMap, Point)>,
    /// Lexicographically smallest image.
    pub canonical: Point,
}

impl Normalization {
    pub fn distinct_images(&self) -> BTreeSet<Point> {
        self.images.iter().map(|(_, q)| q.clone()).collect()
    }
}

pub fn normalize_quadrilateral(p: &PointConfig) -> Result<Normalization> {
    expect_four(p)?;
    let pts = p.points();
    if has_collinear_triple(pts) {
        return Err(Error::DegenerateQuadrilateral);
    }
    let images: Vec<(AffineMap, Point)> = triples(4)
        .map(|(a, b, c, d)| {
            let t = AffineMap::to_standard_triangle(&pts[a], &pts[b], &pts[c])
                .expect("non-collinear triple");
            let q = t.apply(&pts[d]);
            (t, q)
        })
        .collect();
    let canonical = images
        .iter()
        .map(|(_, q)| q)
        .min()
        .expect("24 images")
        .clone();
    Ok(Normalization { images, canonical })
}

/// `24 / #distinct normalized fourth points`.
pub fn isotropy_order(p: &PointConfig) -> Result<u32> {
    let n = normalize_quadrilateral(p)?.distinct_images().len() as u32;
    Ok(24 / n)
}

/// Number of permutations of the points realized by an affine map of the plane.
///
/// Agrees with [`isotropy_order`] on non-degenerate quadrilaterals and also
/// covers configurations with three collinear points. `None` when all points
/// are collinear.
pub fn affine_symmetry_count(p: &PointConfig) -> Option<u32> {
    let pts = p.points();
    let n = pts.len();
    let (i, j, k) = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| !collinear(&pts[i], &pts[j], &pts[k]))?;
    let from = AffineMap::to_standard_triangle(&pts[i], &pts[j], &pts[k]).ok()?;
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c {
                    continue;
                }
                let Ok(to) = AffineMap::from_standard_triangle(&pts[a], &pts[b], &pts[c]) else {
                    continue;
                };
                let t = to.compose(&from);
                if pts.iter().all(|q| p.contains(&t.apply(q))) {
                    count += 1;
                }
            }
        }
    }
    Some(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convexity {
    Convex,
    NonConvex,
}

/// Convex iff no point lies inside the triangle of the other three.
pub fn quad_convexity(p: &PointConfig) -> Result<Convexity> {
    expect_four(p)?;
    if !p.is_real() {
        return Err(Error::NonRealInput);
    }
    let pts = p.points();
    if has_collinear_triple(pts) {
        return Err(Error::DegenerateQuadrilateral);
    }
    let sign = |v: FieldElem| v.re > FieldElem::zero().re;
    for d in 0..4 {
        let o: Vec<usize> = (0..4).filter(|&k| k != d).collect();
        let (a, b, c) = (&pts[o[0]], &pts[o[1]], &pts[o[2]]);
        let q = &pts[d];
        let s1 = sign(orientation(a, b, q));
        let s2 = sign(orientation(b, c, q));
        let s3 = sign(orientation(c, a, q));
        if s1 == s2 && s2 == s3 {
            return Ok(Convexity::NonConvex);
        }
    }
    Ok(Convexity::Convex)
}

/// Vertices of the standard triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    V1,
    V2,
    V3,
}

impl Vertex {
    pub fn point(self) -> Point {
        match self {
            Vertex::V1 => ipt(0, 0),
            Vertex::V2 => ipt(1, 0),
            Vertex::V3 => ipt(0, 1),
        }
    }

    /// Triangle symmetry carrying `V2` to this vertex (an involution).
    fn conjugator(self) -> AffineMap {
        match self {
            Vertex::V1 => AffineMap::from_ints(-1, -1, 0, 1, 1, 0).expect("invertible"),
            Vertex::V2 => AffineMap::identity(),
            Vertex::V3 => AffineMap::swap(),
        }
    }
}

/// The gauge map at `V2`, `(x, y) ↦ (1/x, (−y + yx)/(x − 1))`, taken verbatim;
/// the other vertices are conjugates by triangle symmetries.
pub fn gauge_map_paper(vertex: Vertex, pt: &Point) -> Result<Point> {
    let s = vertex.conjugator();
    let (x, y) = s.apply(pt);
    let one = FieldElem::one();
    let xm1 = &x - &one;
    if x.is_zero() || xm1.is_zero() {
        return Err(Error::OnPoleLocus(point_to_string(pt)));
    }
    let gx = one / &x;
    let gy = &(&(-&y) + &(&y * &x)) / &xm1;
    Ok(s.apply(&(gx, gy)))
}

/// Whether the gauge image of the fourth point of `{V1, V2, V3, q}` is among
/// the 24 normalized fourth points of that configuration.
pub fn gauge_image_in_orbit(vertex: Vertex, q: &Point) -> Result<bool> {
    let g = gauge_map_paper(vertex, q)?;
    let cfg = PointConfig::new(vec![ipt(0, 0), ipt(1, 0), ipt(0, 1), q.clone()])?;
    Ok(normalize_quadrilateral(&cfg)?
        .distinct_images()
        .contains(&g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem1Label {
    #[serde(rename = "ED")]
    EssentiallyDetermined,
    #[serde(rename = "NED")]
    NotEssentiallyDetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadClass {
    /// `None` when all four points are collinear.
    #[serde(with = "crate::exactcore::serial::opt_point")]
    pub normalized_fourth: Option<Point>,
    pub on_arrangement: bool,
    #[serde(rename = "lines")]
    pub which_lines: Vec<usize>,
    pub proj_dim: i64,
    #[serde(rename = "finite")]
    pub critical_set_finite: bool,
    #[serde(rename = "theorem1")]
    pub theorem1_label: Theorem1Label,
    #[serde(rename = "isotropy")]
    pub isotropy_order: Option<u32>,
    pub convexity: Option<Convexity>,
}

/// Classifies a 4-point configuration for cubics.
///
/// Without collinear triples, the label is `ED` iff every one of the 24
/// normalized fourth points is off the arrangement. With three collinear
/// points the configuration is normalized through any non-collinear triple,
/// which puts the fourth point on a side of the triangle, so the label is
/// `NED`. The system may still be a single cubic there, but its critical set
/// is a union of lines rather than the four points.
pub fn classify_cubic(p: &PointConfig) -> Result<QuadClass> {
    expect_four(p)?;
    let arr = ArrangementA::new();
    let sys = solve_linear_system(3, p)?;
    let critical_set_finite = match sys.basis.first() {
        Some(f) => critical_set_finite(f)?,
        None => false,
    };
    let pts = p.points();
    if has_collinear_triple(pts) {
        let fourth = triples(4)
            .filter_map(|(a, b, c, d)| {
                let t = AffineMap::to_standard_triangle(&pts[a], &pts[b], &pts[c]).ok()?;
                Some(t.apply(&pts[d]))
            })
            .min();
        let which_lines = fourth
            .as_ref()
            .map(|q| arr.lines_through(q))
            .unwrap_or_default();
        return Ok(QuadClass {
            on_arrangement: fourth.is_some(),
            normalized_fourth: fourth,
            which_lines,
            proj_dim: sys.proj_dim,
            critical_set_finite,
            theorem1_label: Theorem1Label::NotEssentiallyDetermined,
            isotropy_order: affine_symmetry_count(p),
            convexity: None,
        });
    }
    let norm = normalize_quadrilateral(p)?;
    let all_off = norm
        .images
        .iter()
        .all(|(_, q)| !arrangement_a_value(q).is_zero());
    let canonical = norm.canonical.clone();
    let distinct = norm.distinct_images().len() as u32;
    Ok(QuadClass {
        on_arrangement: arrangement_a_value(&canonical).is_zero(),
        which_lines: arr.lines_through(&canonical),
        normalized_fourth: Some(canonical),
        proj_dim: sys.proj_dim,
        critical_set_finite,
        theorem1_label: if all_off {
            Theorem1Label::EssentiallyDetermined
        } else {
            Theorem1Label::NotEssentiallyDetermined
        },
        isotropy_order: Some(24 / distinct),
        convexity: if p.is_real() {
            Some(quad_convexity(p)?)
        } else {
            None
        },
    })
}

/// One checked statement of the double-point example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub holds: bool,
}

/// Checks the basis and the degeneracy relation of the double-point cubic family
/// `a1·u + a2·(x²y+xy²−xy) + a4·v` at the vertices of the standard triangle.
///
/// The origin is a degenerate critical point iff the Hessian there vanishes,
/// which for `u = 2x³−3x²`, `v = 2y³−3y²` reads `a2² = 36·a1·a4`.
pub fn double_point_family_check() -> Vec<Claim> {
    let tri = PointConfig::from_ints(&[(0, 0), (1, 0), (0, 1)]).expect("distinct");
    let (px, py, pm) = cubic_generators();
    let printed_x = BivarPoly::from_int_terms(&[(3, 0, 1), (2, 0, -3)]);
    let printed_y = BivarPoly::from_int_terms(&[(0, 3, 1), (0, 2, -3)]);
    let half = FieldElem::frac(1, 2);
    let mut out = Vec::new();
    for (name, f) in [
        ("x^2*y + x*y^2 - x*y", &pm),
        ("2*x^3 - 3*x^2", &px),
        ("2*y^3 - 3*y^2", &py),
        ("x^3 - 3*x^2", &printed_x),
        ("y^3 - 3*y^2", &printed_y),
    ] {
        out.push(Claim {
            claim: format!("gradient of {name} vanishes at (0,0), (1,0), (0,1)"),
            holds: verify_containment(f, &tri),
        });
    }
    let samples: [(i64, i64); 4] = [(1, 2), (2, 3), (-1, 4), (3, -9)];
    let relation = |(u, v): (&BivarPoly, &BivarPoly), k: i64, label: &str| {
        let holds = samples.iter().all(|&(a1, a2)| {
            let a1 = FieldElem::int(a1);
            let a2 = FieldElem::int(a2);
            let a4 = &(&a2 * &a2) / &(&FieldElem::int(k) * &a1);
            let f = &(&u.scale(&a1) + &pm.scale(&a2)) + &v.scale(&a4);
            let m = intersection_multiplicity(&f.dx(), &f.dy(), &ipt(0, 0));
            matches!(m, MultiplicityResult::Finite(n) if n >= 2)
        });
        Claim {
            claim: format!(
                "a4 = a2^2/({k}*a1) gives a double critical point at the origin, basis {label}"
            ),
            holds,
        }
    };
    let (hx, hy) = (px.scale(&half), py.scale(&half));
    out.push(relation((&px, &py), 9, "2*x^3 - 3*x^2, 2*y^3 - 3*y^2"));
    out.push(relation((&px, &py), 36, "2*x^3 - 3*x^2, 2*y^3 - 3*y^2"));
    out.push(relation((&hx, &hy), 9, "x^3 - 3/2*x^2, y^3 - 3/2*y^2"));
    out
}
