//! Exact scalars, polynomials, matrices and affine maps.

pub mod affine;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod serial;
pub mod upoly;

pub use affine::AffineMap;
pub use field::{ipt, pt, FieldElem, Point, Rational};
pub use matrix::{QMatrix, RankNullspace};
pub use poly::{bivariate_gcd, column_monomials, BivarPoly, Degree, Exponent, Var};
pub use upoly::UniPoly;
