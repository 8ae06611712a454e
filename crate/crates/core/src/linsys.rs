//! The linear system `L_d(P)`: polynomials of degree at most `d`, without
//! constant term, whose gradient vanishes on a point configuration.

use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactcore::field::point_to_string;
use crate::exactcore::{column_monomials, BivarPoly, FieldElem, Point, QMatrix};

/// An unordered set of distinct points, stored in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PointConfig {
    points: Vec<Point>,
}

impl PointConfig {
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(point_to_string(&w[0])));
        }
        Ok(PointConfig { points })
    }

    pub fn empty() -> Self {
        PointConfig::default()
    }

    /// Integer-coordinate shorthand.
    pub fn from_ints(pts: &[(i64, i64)]) -> Result<Self> {
        PointConfig::new(
            pts.iter()
                .map(|&(x, y)| (FieldElem::int(x), FieldElem::int(y)))
                .collect(),
        )
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_real(&self) -> bool {
        self.points.iter().all(|(x, y)| x.is_real() && y.is_real())
    }

    /// A new configuration with `p` added.
    pub fn with_point(&self, p: Point) -> Result<Self> {
        let mut pts = self.points.clone();
        pts.push(p);
        PointConfig::new(pts)
    }

    /// Image of every point under `f`.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<Self> {
        PointConfig::new(self.points.iter().map(f).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct PointConfigRepr {
    points: Vec<(FieldElem, FieldElem)>,
}

impl Serialize for PointConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointConfigRepr {
            points: self.points.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointConfig {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PointConfigRepr::deserialize(d)?;
        PointConfig::new(repr.points).map_err(serde::de::Error::custom)
    }
}

/// Projective dimension and basis of `L_d(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinSysResult {
    /// `-1` when the system is empty.
    pub proj_dim: i64,
    #[serde(rename = "rank")]
    pub phi_rank: usize,
    pub basis: Vec<BivarPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ConfigTag {
    Forbidden,
    EssentiallyDetermined,
    NonEssential,
}

impl ConfigTag {
    pub fn from_proj_dim(proj_dim: i64) -> Self {
        match proj_dim {
            i64::MIN..=-1 => ConfigTag::Forbidden,
            0 => ConfigTag::EssentiallyDetermined,
            _ => ConfigTag::NonEssential,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigClass {
    pub tag: ConfigTag,
    pub detail: LinSysResult,
}

/// `(d² + 3d) / 2`, the dimension of polynomials of degree `≤ d` without constant term.
pub fn ambient_dimension(d: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::BadDegree { degree: d, min: 1 });
    }
    Ok((d * d + 3 * d) / 2)
}

/// Number of generic critical points needed to pin down the system.
pub fn delta(d: i64) -> Result<i64> {
    check_degree(d)?;
    let n = d * d + 3 * d;
    Ok(if (n / 2) % 2 == 1 { (n - 2) / 4 } else { n / 4 })
}

fn check_degree(d: i64) -> Result<u32> {
    if d < 3 {
        return Err(Error::BadDegree { degree: d, min: 3 });
    }
    u32::try_from(d).map_err(|_| Error::BadDegree { degree: d, min: 3 })
}

/// Gradient rows at one point: `(∂x m(p), ∂y m(p))` for every column monomial `m`.
pub fn gradient_rows(d: u32, p: &Point) -> (Vec<FieldElem>, Vec<FieldElem>) {
    let monos = column_monomials(d);
    let xp = powers(&p.0, d);
    let yp = powers(&p.1, d);
    let fx = monos
        .iter()
        .map(|&(i, j)| match i {
            0 => FieldElem::zero(),
            _ => &(&FieldElem::int(i as i64) * &xp[i as usize - 1]) * &yp[j as usize],
        })
        .collect();
    let fy = monos
        .iter()
        .map(|&(i, j)| match j {
            0 => FieldElem::zero(),
            _ => &(&FieldElem::int(j as i64) * &xp[i as usize]) * &yp[j as usize - 1],
        })
        .collect();
    (fx, fy)
}

fn powers(t: &FieldElem, d: u32) -> Vec<FieldElem> {
    let mut out = vec![FieldElem::one()];
    for k in 1..=d as usize {
        let next = &out[k - 1] * t;
        out.push(next);
    }
    out
}

/// The interpolation matrix: two rows per point (`f_x` then `f_y`), one column
/// per monomial of degree `1..=d`.
pub fn build_phi(d: i64, p: &PointConfig) -> Result<QMatrix> {
    let d = check_degree(d)?;
    Ok(phi_from_points(d, p.points()))
}

/// Same as [`build_phi`] but for an ordered point list; repeated points give
/// repeated rows.
pub fn phi_from_points(d: u32, points: &[Point]) -> QMatrix {
    let cols = column_monomials(d).len();
    let mut rows = Vec::with_capacity(2 * points.len());
    for p in points {
        let (fx, fy) = gradient_rows(d, p);
        rows.push(fx);
        rows.push(fy);
    }
    QMatrix::from_rows_with_cols(rows, Some(cols))
}

pub fn solve_linear_system(d: i64, p: &PointConfig) -> Result<LinSysResult> {
    let phi = build_phi(d, p)?;
    let monos = column_monomials(d as u32);
    let rn = phi.rank_and_nullspace();
    let basis: Vec<BivarPoly> = rn
        .basis
        .iter()
        .map(|v| BivarPoly::from_coefficient_vector(&monos, v))
        .collect();
    Ok(LinSysResult {
        proj_dim: basis.len() as i64 - 1,
        phi_rank: rn.rank,
        basis,
    })
}

pub fn classify_configuration(d: i64, p: &PointConfig) -> Result<ConfigClass> {
    let detail = solve_linear_system(d, p)?;
    Ok(ConfigClass {
        tag: ConfigTag::from_proj_dim(detail.proj_dim),
        detail,
    })
}

/// True iff both partials of `f` vanish at every point of `p`.
pub fn verify_containment(f: &BivarPoly, p: &PointConfig) -> bool {
    let fx = f.dx();
    let fy = f.dy();
    p.points()
        .iter()
        .all(|q| fx.evaluate(q).is_zero() && fy.evaluate(q).is_zero())
}

/// Rank of the coefficient vectors of a list of polynomials.
pub fn span_rank(polys: &[BivarPoly]) -> usize {
    let mut monos: Vec<_> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| *e).collect::<Vec<_>>())
        .collect();
    monos.sort();
    monos.dedup();
    let rows = polys.iter().map(|p| p.coefficient_vector(&monos)).collect();
    QMatrix::from_rows_with_cols(rows, Some(monos.len())).rank()
}

/// Two lists span the same space iff their ranks agree individually and jointly.
pub fn same_span(a: &[BivarPoly], b: &[BivarPoly]) -> bool {
    let ra = span_rank(a);
    let joint: Vec<BivarPoly> = a.iter().chain(b).cloned().collect();
    ra == span_rank(b) && ra == span_rank(&joint)
}

/// 64-bit linear congruential generator (Knuth's MMIX constants).
///
/// `state ← a·state + c (mod 2⁶⁴)`; draws use the high bits of the new state.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    /// Generator for one trial of an experiment: seeded with `seed ^ trial`.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        Lcg::new(seed ^ trial)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        self.state
    }

    /// Uniform-ish integer in `[lo, hi]` from bits 33..63.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + ((self.next_u64() >> 33) % span) as i64
    }

    /// Coordinate in `[-10, 10]`.
    pub fn coord(&mut self) -> i64 {
        self.int_in(-10, 10)
    }

    /// `n` distinct integer points with coordinates in `[-10, 10]`, by rejection.
    pub fn int_config(&mut self, n: usize) -> PointConfig {
        let mut pts: Vec<Point> = Vec::with_capacity(n);
        while pts.len() < n {
            let x = self.coord();
            let y = self.coord();
            let p = (FieldElem::int(x), FieldElem::int(y));
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        PointConfig::new(pts).expect("points are distinct")
    }
}

/// Counts of each class over random configurations of `delta(d)` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct DichotomySummary {
    pub forbidden: usize,
    #[serde(rename = "ed")]
    pub essentially_determined: usize,
    #[serde(rename = "ned")]
    pub non_essential: usize,
}

impl DichotomySummary {
    pub fn record(&mut self, tag: ConfigTag) {
        match tag {
            ConfigTag::Forbidden => self.forbidden += 1,
            ConfigTag::EssentiallyDetermined => self.essentially_determined += 1,
            ConfigTag::NonEssential => self.non_essential += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.forbidden + self.essentially_determined + self.non_essential
    }
}

/// Trial `t` draws `delta(d)` points from `Lcg::for_trial(seed, t)`.
pub fn dichotomy_experiment(d: i64, trials: usize, seed: u64) -> Result<DichotomySummary> {
    let n = delta(d)? as usize;
    let mut summary = DichotomySummary::default();
    for t in 0..trials {
        let cfg = Lcg::for_trial(seed, t as u64).int_config(n);
        summary.record(classify_configuration(d, &cfg)?.tag);
    }
    Ok(summary)
}
