//! Intersection multiplicity of plane curves at a point, Morse tests and
//! finiteness of the critical set.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactcore::field::point_to_string;
use crate::exactcore::{bivariate_gcd, AffineMap, BivarPoly, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MultiplicityResult {
    Finite(u64),
    /// The curves share a component through the point.
    Infinity,
}

impl MultiplicityResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            MultiplicityResult::Finite(n) => Some(n),
            MultiplicityResult::Infinity => None,
        }
    }
}

impl fmt::Display for MultiplicityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplicityResult::Finite(n) => write!(f, "{n}"),
            MultiplicityResult::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for MultiplicityResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MultiplicityResult::Finite(n) => s.serialize_u64(*n),
            MultiplicityResult::Infinity => s.serialize_str("inf"),
        }
    }
}

/// `I_p(f, g)` by Fulton's algorithm.
///
/// The point is moved to the origin, common components are split off with a
/// gcd (a component through `p` gives `Infinity`), and the remaining pair is
/// reduced using `I(F, G) = I(F, G + A·F)` on the restrictions to `y = 0`.
pub fn intersection_multiplicity(f: &BivarPoly, g: &BivarPoly, pt: &Point) -> MultiplicityResult {
    let shift = AffineMap::translation(pt.0.clone(), pt.1.clone());
    let mut f = f.affine_pullback(&shift);
    let mut g = g.affine_pullback(&shift);
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return MultiplicityResult::Finite(0);
    }
    let common = bivariate_gcd(&f, &g);
    if common.constant_term().is_zero() {
        return MultiplicityResult::Infinity;
    }
    if !common.is_constant() {
        f = exact_quotient(&f, &common);
        g = exact_quotient(&g, &common);
    }
    MultiplicityResult::Finite(fulton_at_origin(f, g))
}

fn exact_quotient(num: &BivarPoly, den: &BivarPoly) -> BivarPoly {
    num.exact_divide(den)
        .expect("nonzero divisor")
        .expect("gcd divides its arguments")
}

/// Requires `f` and `g` to have no common component through the origin.
fn fulton_at_origin(mut f: BivarPoly, mut g: BivarPoly) -> u64 {
    let y = BivarPoly::y();
    let mut acc = 0u64;
    loop {
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return acc;
        }
        let mut fr = f.restrict_y_zero();
        let mut gr = g.restrict_y_zero();
        let r = fr.degree().unwrap_or(0);
        let s = gr.degree().unwrap_or(0);
        if r > s {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut fr, &mut gr);
        }
        if fr.is_zero() {
            // y divides f: I(y·f1, g) = I(y, g) + I(f1, g), and I(y, g) = ord_x g(x, 0)
            acc += gr.order_at_zero().expect("no common component y") as u64;
            f = exact_quotient(&f, &y);
            continue;
        }
        let (r, s) = (fr.degree().unwrap(), gr.degree().unwrap());
        let lc = gr.leading().unwrap() / fr.leading().unwrap();
        let h = &g - &f.shift((s - r) as u32, 0).scale(&lc);
        g = h;
    }
}

/// Milnor number of `f` at `pt`: `I_pt(f_x, f_y)`.
pub fn milnor_number(f: &BivarPoly, pt: &Point) -> MultiplicityResult {
    intersection_multiplicity(&f.dx(), &f.dy(), pt)
}

/// Hessian determinant `f_xx f_yy − f_xy²` at `pt`.
pub fn hessian_det(f: &BivarPoly, pt: &Point) -> crate::exactcore::FieldElem {
    let fx = f.dx();
    let fy = f.dy();
    let fxx = fx.dx().evaluate(pt);
    let fxy = fx.dy().evaluate(pt);
    let fyy = fy.dy().evaluate(pt);
    &(&fxx * &fyy) - &(&fxy * &fxy)
}

/// A critical point is Morse iff the Hessian determinant is nonzero there.
pub fn is_morse_point(f: &BivarPoly, pt: &Point) -> Result<bool> {
    if !f.dx().evaluate(pt).is_zero() || !f.dy().evaluate(pt).is_zero() {
        return Err(Error::NotACriticalPoint(point_to_string(pt)));
    }
    Ok(!hessian_det(f, pt).is_zero())
}

/// True iff `f_x` and `f_y` share no curve component.
pub fn critical_set_finite(f: &BivarPoly) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let g = bivariate_gcd(&f.dx(), &f.dy());
    Ok(!g.is_zero() && g.is_constant())
}
