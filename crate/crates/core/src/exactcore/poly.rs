//! Sparse bivariate polynomials over [`FieldElem`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::affine::AffineMap;
use super::field::{FieldElem, Point};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Exponent = (u32, u32);

/// Which variable a derivative or integral acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Total degree; the zero polynomial has degree `MinusInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Compares exponents in the column order: total degree first, then x-exponent.
/// `Greater` means earlier in the descending column order.
pub fn graded_cmp(a: &Exponent, b: &Exponent) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

/// Monomials `x^i y^j` with `1 ≤ i + j ≤ d`, in the column order:
/// total degree descending, ties broken by x-exponent descending.
pub fn column_monomials(d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for k in (1..=d).rev() {
        for i in (0..=k).rev() {
            out.push((i, k - i));
        }
    }
    out
}

/// Sparse polynomial in `x, y`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Exponent, FieldElem>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(FieldElem::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        BivarPoly::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        BivarPoly::monomial(FieldElem::one(), 1, 0)
    }

    pub fn y() -> Self {
        BivarPoly::monomial(FieldElem::one(), 0, 1)
    }

    pub fn monomial(c: FieldElem, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivarPoly { terms }
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, FieldElem)>>(terms: I) -> Self {
        let mut map: BTreeMap<Exponent, FieldElem> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += &c;
        }
        map.retain(|_, c| !c.is_zero());
        BivarPoly { terms: map }
    }

    /// Integer-coefficient shorthand: `[(i, j, c), ...]`.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        BivarPoly::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), FieldElem::int(c))))
    }

    /// The linear polynomial `a·x + b·y + c`.
    pub fn linear(a: FieldElem, b: FieldElem, c: FieldElem) -> Self {
        BivarPoly::from_terms([((1, 0), a), ((0, 1), b), ((0, 0), c)])
    }

    /// Lifts a univariate polynomial in `var`.
    pub fn from_univariate(p: &UniPoly, var: Var) -> Self {
        BivarPoly::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            let e = match var {
                Var::X => (k, 0),
                Var::Y => (0, k),
            };
            (e, c.clone())
        }))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElem {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> FieldElem {
        self.coeff(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(FieldElem::is_real)
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(i, j)| i + j)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| match var {
                Var::X => i,
                Var::Y => j,
            })
            .max()
    }

    /// Leading term under the graded column order.
    pub fn leading_term(&self) -> Option<(Exponent, &FieldElem)> {
        self.terms
            .iter()
            .max_by(|a, b| graded_cmp(a.0, b.0))
            .map(|(e, c)| (*e, c))
    }

    /// Scaled so that the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> BivarPoly {
        match self.leading_term().and_then(|(_, c)| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => BivarPoly::zero(),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Multiplies by `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> BivarPoly {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 + i, e.1 + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> BivarPoly {
        let mut acc = BivarPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Same polynomial without its constant term.
    pub fn without_constant(&self) -> BivarPoly {
        let mut out = self.clone();
        out.terms.remove(&(0, 0));
        out
    }

    /// `∂p/∂x` or `∂p/∂y`.
    pub fn partial_derivative(&self, var: Var) -> BivarPoly {
        let terms = self.terms.iter().filter_map(|(&(i, j), c)| match var {
            Var::X if i > 0 => Some(((i - 1, j), c * &FieldElem::int(i as i64))),
            Var::Y if j > 0 => Some(((i, j - 1), c * &FieldElem::int(j as i64))),
            _ => None,
        });
        BivarPoly::from_terms(terms)
    }

    pub fn dx(&self) -> BivarPoly {
        self.partial_derivative(Var::X)
    }

    pub fn dy(&self) -> BivarPoly {
        self.partial_derivative(Var::Y)
    }

    /// Antiderivative in `var` with no terms free of `var`.
    pub fn integral(&self, var: Var) -> BivarPoly {
        let terms = self.terms.iter().map(|(&(i, j), c)| match var {
            Var::X => ((i + 1, j), c / &FieldElem::int(i as i64 + 1)),
            Var::Y => ((i, j + 1), c / &FieldElem::int(j as i64 + 1)),
        });
        BivarPoly::from_terms(terms)
    }

    /// Exact evaluation, Horner in `x` inside Horner in `y`.
    pub fn evaluate(&self, p: &Point) -> FieldElem {
        let (px, py) = p;
        let rows = self.y_rows();
        let top = match rows.keys().next_back() {
            Some(&j) => j,
            None => return FieldElem::zero(),
        };
        let mut acc = FieldElem::zero();
        for j in (0..=top).rev() {
            acc = &acc * py;
            if let Some(row) = rows.get(&j) {
                acc += &horner(row, px);
            }
        }
        acc
    }

    /// Groups terms by y-exponent into dense x-coefficient rows.
    fn y_rows(&self) -> BTreeMap<u32, Vec<FieldElem>> {
        let mut rows: BTreeMap<u32, Vec<FieldElem>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let row = rows.entry(j).or_default();
            if row.len() <= i as usize {
                row.resize(i as usize + 1, FieldElem::zero());
            }
            row[i as usize] = c.clone();
        }
        rows
    }

    /// `p ∘ T`, the polynomial `(x, y) ↦ p(T(x, y))`.
    pub fn affine_pullback(&self, t: &AffineMap) -> BivarPoly {
        let [[a, b], [c, d]] = &t.linear;
        let (e, f) = &t.translation;
        let u = BivarPoly::linear(a.clone(), b.clone(), e.clone());
        let v = BivarPoly::linear(c.clone(), d.clone(), f.clone());
        let max_i = self.degree_in(Var::X).unwrap_or(0) as usize;
        let max_j = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let mut u_pows = vec![BivarPoly::one()];
        for k in 1..=max_i {
            let next = &u_pows[k - 1] * &u;
            u_pows.push(next);
        }
        let mut v_pows = vec![BivarPoly::one()];
        for k in 1..=max_j {
            let next = &v_pows[k - 1] * &v;
            v_pows.push(next);
        }
        let mut out = BivarPoly::zero();
        for (&(i, j), coeff) in &self.terms {
            let term = (&u_pows[i as usize] * &v_pows[j as usize]).scale(coeff);
            out = &out + &term;
        }
        out
    }

    /// Exact quotient `self / den`, or `Ok(None)` when `den` does not divide `self`.
    pub fn exact_divide(&self, den: &BivarPoly) -> Result<Option<BivarPoly>> {
        let (lead_e, lead_c) = den.leading_term().ok_or(Error::DivisionByZeroPoly)?;
        let lead_inv = lead_c.inv().expect("leading coefficient is nonzero");
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        // Any multiple of `den` has leading term divisible by LT(den); the first
        // remainder violating that proves non-divisibility.
        while let Some((e, c)) = rem.leading_term() {
            if e.0 < lead_e.0 || e.1 < lead_e.1 {
                return Ok(None);
            }
            let factor = BivarPoly::monomial(c * &lead_inv, e.0 - lead_e.0, e.1 - lead_e.1);
            rem = &rem - &(&factor * den);
            quot = &quot + &factor;
        }
        Ok(Some(quot))
    }

    /// As a polynomial in `y` whose coefficients are univariate polynomials in `x`.
    pub fn to_y_coeffs(&self) -> Vec<UniPoly> {
        let rows = self.y_rows();
        let top = match rows.keys().next_back() {
            Some(&j) => j as usize,
            None => return Vec::new(),
        };
        (0..=top)
            .map(|j| {
                rows.get(&(j as u32))
                    .map(|r| UniPoly::from_coeffs(r.clone()))
                    .unwrap_or_default()
            })
            .collect()
    }

    pub fn from_y_coeffs(coeffs: &[UniPoly]) -> BivarPoly {
        BivarPoly::from_terms(coeffs.iter().enumerate().flat_map(|(j, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .map(move |(i, c)| ((i as u32, j as u32), c.clone()))
        }))
    }

    /// `p(x, 0)` as a univariate polynomial in `x`.
    pub fn restrict_y_zero(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                if coeffs.len() <= i as usize {
                    coeffs.resize(i as usize + 1, FieldElem::zero());
                }
                coeffs[i as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Coefficient vector over the given monomial list.
    pub fn coefficient_vector(&self, monomials: &[Exponent]) -> Vec<FieldElem> {
        monomials.iter().map(|&(i, j)| self.coeff(i, j)).collect()
    }

    pub fn from_coefficient_vector(monomials: &[Exponent], v: &[FieldElem]) -> BivarPoly {
        BivarPoly::from_terms(monomials.iter().copied().zip(v.iter().cloned()))
    }

    /// Terms sorted in descending column order.
    pub fn sorted_terms(&self) -> Vec<(Exponent, FieldElem)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|a, b| graded_cmp(&b.0, &a.0));
        v
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap_xy(&self) -> BivarPoly {
        BivarPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }
}

fn horner(row: &[FieldElem], t: &FieldElem) -> FieldElem {
    let mut acc = FieldElem::zero();
    for c in row.iter().rev() {
        acc = &(&acc * t) + c;
    }
    acc
}

/// Greatest common divisor, normalized to leading coefficient one under the
/// column order. `gcd(0, 0)` is zero.
///
/// Works in `K[x][y]`: contents are univariate gcds over `K[x]`, primitive
/// parts go through a primitive pseudo-remainder sequence in `y`.
pub fn bivariate_gcd(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let ya = a.to_y_coeffs();
    let yb = b.to_y_coeffs();
    let ca = content(&ya);
    let cb = content(&yb);
    let c = ca.gcd(&cb);
    let mut pa = divide_content(&ya, &ca);
    let mut pb = divide_content(&yb, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        if pb.len() <= 1 {
            // primitive and free of y: a unit
            break vec![UniPoly::one()];
        }
        let r = pseudo_remainder(&pa, &pb);
        if r.is_empty() {
            break pb;
        }
        let cr = content(&r);
        pa = pb;
        pb = divide_content(&r, &cr);
    };
    let g = BivarPoly::from_y_coeffs(&g);
    let cpoly = BivarPoly::from_univariate(&c, Var::X);
    (&g * &cpoly).monic()
}

fn content(p: &[UniPoly]) -> UniPoly {
    p.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
}

fn divide_content(p: &[UniPoly], c: &UniPoly) -> Vec<UniPoly> {
    p.iter()
        .map(|row| {
            let (q, r) = row.div_rem(c);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

fn trim(mut p: Vec<UniPoly>) -> Vec<UniPoly> {
    while p.last().is_some_and(UniPoly::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b` as polynomials in `y` over `K[x]`.
fn pseudo_remainder(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<UniPoly> = r.iter().map(|c| c.mul(lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&bc.mul(&lr));
        }
        r = trim(next);
    }
    r
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((i, j), c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = match (i, j) {
                (0, 0) => String::new(),
                (i, 0) => pow_str("x", i),
                (0, j) => pow_str("y", j),
                (i, j) => format!("{}*{}", pow_str("x", i), pow_str("y", j)),
            };
            let (neg, mag) = if c.is_real() && c.re < num_traits::Zero::zero() {
                (true, -c)
            } else {
                (false, c)
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn pow_str(v: &str, k: u32) -> String {
    if k == 1 {
        v.to_string()
    } else {
        format!("{v}^{k}")
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        BivarPoly { terms }
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_default();
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        BivarPoly { terms }
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms: BTreeMap<Exponent, FieldElem> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *terms.entry((ea.0 + eb.0, ea.1 + eb.1)).or_default() += &(ca * cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BivarPoly { terms }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_poly_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: &BivarPoly) -> BivarPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<BivarPoly> for &'a BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: BivarPoly) -> BivarPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_poly_binop!(Add add, Sub sub, Mul mul);
