//! Exact computation of plane polynomials with prescribed critical points.
//!
//! All arithmetic is over the rationals or the Gaussian rationals. Floating
//! point appears only in the SVG renderer.

pub mod cli;
pub mod cubic;
pub mod error;
pub mod exactcore;
pub mod interpcurve;
pub mod linsys;
pub mod multiplicity;
pub mod pencil;
