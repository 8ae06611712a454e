//! Dense univariate polynomials over [`FieldElem`].
//!
//! Used as the coefficient ring for the bivariate gcd, for one-variable
//! restrictions in the multiplicity algorithm, and for evaluation–interpolation.

use super::field::FieldElem;

/// Coefficients in ascending powers; no trailing zeros (zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(FieldElem::one())
    }

    /// `c · t^k`.
    pub fn monomial(c: FieldElem, k: usize) -> Self {
        let mut coeffs = vec![FieldElem::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    /// Largest `k` with `t^k` dividing the polynomial (`None` for zero).
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, t: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![FieldElem::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &FieldElem) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().and_then(FieldElem::inv).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![FieldElem::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let factor = &rem[k] * &lead_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &factor * dc;
                rem[k - dd + j] -= &t;
            }
            quot[k - dd] = factor;
        }
        rem.truncate(dd);
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Scaled to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.leading().and_then(FieldElem::inv) {
            Some(inv) => self.scale(&inv),
            None => UniPoly::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &FieldElem::int(k as i64))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> UniPoly {
        let mut coeffs = vec![FieldElem::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / &FieldElem::int(k as i64 + 1)),
        );
        UniPoly::from_coeffs(coeffs)
    }

    /// `Π (t − r)` over the given roots.
    pub fn from_roots(roots: &[FieldElem]) -> UniPoly {
        roots.iter().fold(UniPoly::one(), |acc, r| {
            acc.mul(&UniPoly::from_coeffs(vec![-r, FieldElem::one()]))
        })
    }

    /// Unique polynomial of degree `< nodes.len()` through `(nodes[k], values[k])`,
    /// via Newton divided differences. Nodes must be distinct.
    pub fn interpolate(nodes: &[FieldElem], values: &[FieldElem]) -> UniPoly {
        assert_eq!(nodes.len(), values.len());
        let n = nodes.len();
        let mut dd: Vec<FieldElem> = values.to_vec();
        for level in 1..n {
            for k in (level..n).rev() {
                let num = &dd[k] - &dd[k - 1];
                let den = &nodes[k] - &nodes[k - level];
                dd[k] = &num / &den;
            }
        }
        // Horner over the Newton basis.
        let mut acc = UniPoly::zero();
        for k in (0..n).rev() {
            let shift = UniPoly::from_coeffs(vec![-&nodes[k], FieldElem::one()]);
            acc = acc.mul(&shift).add(&UniPoly::constant(dd[k].clone()));
        }
        acc
    }
}
