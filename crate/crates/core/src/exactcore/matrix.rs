//! Dense matrices over [`FieldElem`] with exact elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{FieldElem, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

/// Rank plus a nullspace basis. Basis vector `k` has a one in the
/// `k`-th free column and zeros in every other free column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankNullspace {
    pub rank: usize,
    pub basis: Vec<Vec<FieldElem>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![FieldElem::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, FieldElem::one());
        }
        m
    }

    /// Panics if the rows have unequal length.
    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Self {
        QMatrix::from_rows_with_cols(rows, None)
    }

    /// Like [`QMatrix::from_rows`] but keeps the column count for empty row lists.
    pub fn from_rows_with_cols(rows: Vec<Vec<FieldElem>>, cols: Option<usize>) -> Self {
        let cols = cols.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r);
        }
        QMatrix {
            rows: nrows,
            cols,
            entries,
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| FieldElem::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * other.get(k, j);
                    out.entries[i * other.cols + j] += &t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns. Pivot = first nonzero entry.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(src) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(prow, src);
            let inv = m.get(prow, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(prow, c) * &inv;
                m.set(prow, c, v);
            }
            for r in 0..m.rows {
                if r == prow || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let t = &factor * m.get(prow, c);
                    let v = m.get(r, c) - &t;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rank_and_nullspace(&self) -> RankNullspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![FieldElem::zero(); self.cols];
                v[free] = FieldElem::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, free);
                }
                v
            })
            .collect();
        RankNullspace {
            rank: pivots.len(),
            basis,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Real matrices are scaled row-wise to integers and eliminated over `BigInt`;
    /// matrices with Gaussian entries use the same recurrence over the field.
    pub fn determinant(&self) -> Result<FieldElem> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.entries.iter().all(FieldElem::is_real) {
            Ok(FieldElem::real(self.integer_bareiss()))
        } else {
            Ok(self.field_bareiss())
        }
    }

    fn integer_bareiss(&self) -> Rational {
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                let row = self.row(r);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.re.denom()));
                scale *= &lcm;
                row.iter()
                    .map(|v| v.re.numer() * (&lcm / v.re.denom()))
                    .collect()
            })
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Rational::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Rational::new(sign * &a[n - 1][n - 1], scale)
    }

    fn field_bareiss(&self) -> FieldElem {
        let n = self.rows;
        if n == 0 {
            return FieldElem::one();
        }
        let mut a = self.row_vecs();
        let mut negate = false;
        let mut prev = FieldElem::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return FieldElem::zero();
                };
                a.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &v / &prev;
                }
                a[i][k] = FieldElem::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}
