//! Pencils of polynomial vector fields `X_M = −(cF+dG)∂x + (aF+bG)∂y`
//! sharing the zero set `F = G = 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactcore::field::point_to_string;
use crate::exactcore::{BivarPoly, FieldElem, Point, QMatrix, UniPoly, Var};
use crate::linsys::PointConfig;

/// `p ∂/∂x + q ∂/∂y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VectorFieldPoly {
    pub p_comp: BivarPoly,
    pub q_comp: BivarPoly,
}

impl VectorFieldPoly {
    pub fn new(p_comp: BivarPoly, q_comp: BivarPoly) -> Self {
        VectorFieldPoly { p_comp, q_comp }
    }

    /// `X_f = −f_y ∂/∂x + f_x ∂/∂y`.
    pub fn hamiltonian_of(f: &BivarPoly) -> Self {
        VectorFieldPoly::new(-&f.dy(), f.dx())
    }

    pub fn divergence(&self) -> BivarPoly {
        &self.p_comp.dx() + &self.q_comp.dy()
    }

    pub fn vanishes_at(&self, pt: &Point) -> bool {
        self.p_comp.evaluate(pt).is_zero() && self.q_comp.evaluate(pt).is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.p_comp.degree().max(self.q_comp.degree()).finite()
    }
}

/// `F`, `G` and the matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilSpec {
    pub f_curve: BivarPoly,
    pub g_curve: BivarPoly,
    pub m: [[FieldElem; 2]; 2],
}

impl PencilSpec {
    pub fn new(f_curve: BivarPoly, g_curve: BivarPoly, m: [[FieldElem; 2]; 2]) -> Self {
        PencilSpec {
            f_curve,
            g_curve,
            m,
        }
    }

    pub fn det(&self) -> FieldElem {
        let [[a, b], [c, d]] = &self.m;
        &(a * d) - &(b * c)
    }
}

pub fn pencil_vector_field(s: &PencilSpec) -> VectorFieldPoly {
    let [[a, b], [c, d]] = &s.m;
    let (f, g) = (&s.f_curve, &s.g_curve);
    let p = -&(&f.scale(c) + &g.scale(d));
    let q = &f.scale(a) + &g.scale(b);
    VectorFieldPoly::new(p, q)
}

/// Divergence-free test.
pub fn is_hamiltonian(x: &VectorFieldPoly) -> bool {
    x.divergence().is_zero()
}

/// The potential `f` with `X_f = x` and `f(0,0) = 0`.
pub fn hamiltonian_potential(x: &VectorFieldPoly) -> Result<BivarPoly> {
    if !is_hamiltonian(x) {
        return Err(Error::NotHamiltonian);
    }
    // f_x = q, f_y = −p
    let partial = x.q_comp.integral(Var::X);
    let rest = &(-&x.p_comp) - &partial.dy();
    debug_assert!(rest.degree_in(Var::X).unwrap_or(0) == 0);
    Ok(&partial + &rest.integral(Var::Y))
}

/// Solution space of the linear conditions on `(a, b, c, d)` making the pencil
/// member Hamiltonian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonianSlice {
    pub dim: usize,
    /// Vectors `(a, b, c, d)`.
    pub basis: Vec<Vec<FieldElem>>,
}

/// Equates the coefficients of `−cF_x − dG_x + aF_y + bG_y` to zero.
pub fn hamiltonian_slice(f_curve: &BivarPoly, g_curve: &BivarPoly) -> HamiltonianSlice {
    let cols = [f_curve.dy(), g_curve.dy(), -&f_curve.dx(), -&g_curve.dx()];
    let mut monos: Vec<_> = cols
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| *e).collect::<Vec<_>>())
        .collect();
    monos.sort();
    monos.dedup();
    let rows = monos
        .iter()
        .map(|&(i, j)| cols.iter().map(|p| p.coeff(i, j)).collect())
        .collect();
    let rn = QMatrix::from_rows_with_cols(rows, Some(4)).rank_and_nullspace();
    HamiltonianSlice {
        dim: rn.basis.len(),
        basis: rn.basis,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroType {
    /// Trace zero, positive determinant.
    Center,
    /// Negative determinant.
    Saddle,
    Other,
}

/// Characteristic polynomial `λ² − trace·λ + det` of the linear part at a zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    #[serde(with = "crate::exactcore::serial::point")]
    pub point: Point,
    pub trace: FieldElem,
    pub det: FieldElem,
    /// `None` for non-real data.
    pub kind: Option<ZeroType>,
}

impl Spectrum {
    /// `(1, −trace, det)`.
    pub fn char_poly(&self) -> [FieldElem; 3] {
        [FieldElem::one(), -&self.trace, self.det.clone()]
    }
}

pub fn linearization_spectrum(x: &VectorFieldPoly, pt: &Point) -> Result<Spectrum> {
    if !x.vanishes_at(pt) {
        return Err(Error::NotAZero(point_to_string(pt)));
    }
    let px = x.p_comp.dx().evaluate(pt);
    let py = x.p_comp.dy().evaluate(pt);
    let qx = x.q_comp.dx().evaluate(pt);
    let qy = x.q_comp.dy().evaluate(pt);
    let trace = &px + &qy;
    let det = &(&px * &qy) - &(&py * &qx);
    let kind = (trace.is_real() && det.is_real()).then(|| {
        let zero = FieldElem::zero().re;
        if det.re < zero {
            ZeroType::Saddle
        } else if trace.is_zero() && det.re > zero {
            ZeroType::Center
        } else {
            ZeroType::Other
        }
    });
    Ok(Spectrum {
        point: pt.clone(),
        trace,
        det,
        kind,
    })
}

/// The grid `x_roots × y_roots`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridConfig {
    pub x_roots: Vec<FieldElem>,
    pub y_roots: Vec<FieldElem>,
}

impl GridConfig {
    pub fn new(x_roots: Vec<FieldElem>, y_roots: Vec<FieldElem>) -> Result<Self> {
        for roots in [&x_roots, &y_roots] {
            let mut s = roots.clone();
            s.sort();
            if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicatePoint(w[0].to_string()));
            }
        }
        Ok(GridConfig { x_roots, y_roots })
    }

    pub fn from_ints(xs: &[i64], ys: &[i64]) -> Result<Self> {
        GridConfig::new(
            xs.iter().map(|&v| FieldElem::int(v)).collect(),
            ys.iter().map(|&v| FieldElem::int(v)).collect(),
        )
    }

    pub fn points(&self) -> Vec<Point> {
        self.x_roots
            .iter()
            .flat_map(|x| self.y_roots.iter().map(move |y| (x.clone(), y.clone())))
            .collect()
    }

    pub fn config(&self) -> PointConfig {
        PointConfig::new(self.points()).expect("grid points are distinct")
    }

    /// `Π (x − x_ι)`.
    pub fn f_curve(&self) -> BivarPoly {
        BivarPoly::from_univariate(&UniPoly::from_roots(&self.x_roots), Var::X)
    }

    /// `Π (y − y_j)`.
    pub fn g_curve(&self) -> BivarPoly {
        BivarPoly::from_univariate(&UniPoly::from_roots(&self.y_roots), Var::Y)
    }
}

/// `a·∫Π(x−x_ι)dx + d·∫Π(y−y_j)dy` without constant term.
pub fn grid_polynomial_family(g: &GridConfig, a: &FieldElem, d: &FieldElem) -> Result<BivarPoly> {
    if a.is_zero() && d.is_zero() {
        return Err(Error::ZeroParameters);
    }
    let fx = g.f_curve().integral(Var::X).scale(a);
    let fy = g.g_curve().integral(Var::Y).scale(d);
    Ok(&fx + &fy)
}

/// `(x³/3 − x²/2) + (y³/3 − y²/2)`.
pub fn unit_grid_potential() -> BivarPoly {
    let g = GridConfig::from_ints(&[0, 1], &[0, 1]).expect("distinct roots");
    grid_polynomial_family(&g, &FieldElem::one(), &FieldElem::one()).expect("nonzero")
}

/// `x + y − 1` and `2x² − 2xy + 2y² − x − y − 1`.
pub fn rotated_family_factors() -> (BivarPoly, BivarPoly) {
    (
        BivarPoly::from_int_terms(&[(1, 0, 1), (0, 1, 1), (0, 0, -1)]),
        BivarPoly::from_int_terms(&[
            (2, 0, 2),
            (1, 1, -2),
            (0, 2, 2),
            (1, 0, -1),
            (0, 1, -1),
            (0, 0, -1),
        ]),
    )
}

/// Checks `6·(f + 1/6) = (x+y−1)(2x²−2xy+2y²−x−y−1)` for the unit grid potential.
pub fn rotated_family_reducibility_check() -> bool {
    let f = unit_grid_potential();
    let lhs = (&f + &BivarPoly::constant(FieldElem::frac(1, 6))).scale(&FieldElem::int(6));
    let (l, q) = rotated_family_factors();
    lhs == &l * &q
}
