//! Invertible affine maps of the plane, `v ↦ L·v + t`.

use super::field::{FieldElem, Point};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    /// Row-major `[[a, b], [c, d]]`: `(x, y) ↦ (a x + b y, c x + d y)`.
    pub linear: [[FieldElem; 2]; 2],
    pub translation: (FieldElem, FieldElem),
}

impl AffineMap {
    pub fn new(linear: [[FieldElem; 2]; 2], translation: (FieldElem, FieldElem)) -> Result<Self> {
        let m = AffineMap {
            linear,
            translation,
        };
        if m.det().is_zero() {
            return Err(Error::SingularAffineMap);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        AffineMap {
            linear: [
                [FieldElem::one(), FieldElem::zero()],
                [FieldElem::zero(), FieldElem::one()],
            ],
            translation: (FieldElem::zero(), FieldElem::zero()),
        }
    }

    pub fn translation(dx: FieldElem, dy: FieldElem) -> Self {
        AffineMap {
            translation: (dx, dy),
            ..AffineMap::identity()
        }
    }

    /// `(x, y) ↦ (y, x)`.
    pub fn swap() -> Self {
        AffineMap {
            linear: [
                [FieldElem::zero(), FieldElem::one()],
                [FieldElem::one(), FieldElem::zero()],
            ],
            translation: (FieldElem::zero(), FieldElem::zero()),
        }
    }

    /// Integer-entry shorthand `(x, y) ↦ (a x + b y + e, c x + d y + f)`.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> Result<Self> {
        AffineMap::new(
            [
                [FieldElem::int(a), FieldElem::int(b)],
                [FieldElem::int(c), FieldElem::int(d)],
            ],
            (FieldElem::int(e), FieldElem::int(f)),
        )
    }

    /// The map sending `(0,0), (1,0), (0,1)` to `p0, p1, p2`.
    pub fn from_standard_triangle(p0: &Point, p1: &Point, p2: &Point) -> Result<Self> {
        AffineMap::new(
            [
                [&p1.0 - &p0.0, &p2.0 - &p0.0],
                [&p1.1 - &p0.1, &p2.1 - &p0.1],
            ],
            p0.clone(),
        )
    }

    /// The map sending `p0, p1, p2` to `(0,0), (1,0), (0,1)`.
    pub fn to_standard_triangle(p0: &Point, p1: &Point, p2: &Point) -> Result<Self> {
        Ok(AffineMap::from_standard_triangle(p0, p1, p2)?.inverse())
    }

    pub fn det(&self) -> FieldElem {
        let [[a, b], [c, d]] = &self.linear;
        &(a * d) - &(b * c)
    }

    pub fn apply(&self, p: &Point) -> Point {
        let [[a, b], [c, d]] = &self.linear;
        let (e, f) = &self.translation;
        (
            &(&(a * &p.0) + &(b * &p.1)) + e,
            &(&(c * &p.0) + &(d * &p.1)) + f,
        )
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let [[a, b], [c, d]] = &self.linear;
        let [[p, q], [r, s]] = &other.linear;
        let linear = [
            [&(a * p) + &(b * r), &(a * q) + &(b * s)],
            [&(c * p) + &(d * r), &(c * q) + &(d * s)],
        ];
        AffineMap {
            linear,
            translation: self.apply(&other.translation),
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let [[a, b], [c, d]] = &self.linear;
        let inv_det = self.det().inv().expect("affine map is invertible");
        let linear = [
            [d * &inv_det, -(b * &inv_det)],
            [-(c * &inv_det), a * &inv_det],
        ];
        let partial = AffineMap {
            linear,
            translation: (FieldElem::zero(), FieldElem::zero()),
        };
        let (tx, ty) = partial.apply(&self.translation);
        AffineMap {
            translation: (-tx, -ty),
            ..partial
        }
    }
}
