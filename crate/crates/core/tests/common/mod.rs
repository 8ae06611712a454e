//! Reference implementations used to cross-check the library. They share no
//! code with it beyond the scalar type and the polynomial container.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use critpoint::exactcore::{BivarPoly, FieldElem, Rational};
use critpoint::linsys::Lcg;
use num_traits::{One, Zero};

/// Cofactor expansion along the first row, memoized on the set of columns
/// still available. Exponential in `n`; fine up to 14 or so.
pub fn laplace_det(m: &[Vec<FieldElem>]) -> FieldElem {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n));
    let mut memo: HashMap<u32, FieldElem> = HashMap::new();
    laplace_rec(m, (1u32 << n) - 1, &mut memo)
}

fn laplace_rec(m: &[Vec<FieldElem>], cols: u32, memo: &mut HashMap<u32, FieldElem>) -> FieldElem {
    if cols == 0 {
        return FieldElem::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let n = m.len();
    let row = n - cols.count_ones() as usize;
    let mut acc = FieldElem::zero();
    let mut sign_pos = true;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let e = &m[row][c];
        if !e.is_zero() {
            let minor = laplace_rec(m, cols & !(1 << c), memo);
            let term = e * &minor;
            acc = if sign_pos { &acc + &term } else { &acc - &term };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Plain rational rank by Gaussian elimination on dense rows.
pub fn dense_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (e, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *e -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

type Dense = BTreeMap<(u32, u32), Rational>;

fn to_dense(f: &BivarPoly) -> Dense {
    f.terms()
        .map(|(&e, c)| {
            assert!(c.is_real(), "oracle handles real polynomials only");
            (e, c.re.clone())
        })
        .collect()
}

fn binom(n: u32, k: u32) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    r
}

/// `f(x + a, y + b)` by binomial expansion.
pub fn translate(f: &BivarPoly, a: &Rational, b: &Rational) -> Dense {
    let mut out = Dense::new();
    for ((i, j), c) in to_dense(f) {
        for k in 0..=i {
            for l in 0..=j {
                let coef = &c
                    * binom(i, k)
                    * binom(j, l)
                    * num_traits::pow(a.clone(), (i - k) as usize)
                    * num_traits::pow(b.clone(), (j - l) as usize);
                *out.entry((k, l)).or_insert_with(Rational::zero) += coef;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `dim O/(F, G, m^n)` at the origin, for polynomials already centered there.
fn truncated_dim(f: &Dense, g: &Dense, n: u32) -> usize {
    let monos: Vec<(u32, u32)> = (0..n)
        .flat_map(|t| (0..=t).map(move |i| (i, t - i)))
        .collect();
    let index: HashMap<(u32, u32), usize> =
        monos.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let mut rows = Vec::new();
    for h in [f, g] {
        for &(a, b) in &monos {
            let mut row = vec![Rational::zero(); monos.len()];
            let mut any = false;
            for (&(i, j), c) in h {
                if let Some(&k) = index.get(&(i + a, j + b)) {
                    row[k] += c;
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    monos.len() - dense_rank(rows)
}

/// Local intersection number at `(a, b)` as the length of the local algebra.
///
/// `h(n) = dim O/(I + m^n)` is non-decreasing, and once `h(n) = h(n+1)` it is
/// constant from then on. The truncation is doubled until that happens.
/// Returns `None` if no stable value is found below `cap`.
pub fn local_algebra_dim(
    f: &BivarPoly,
    g: &BivarPoly,
    a: &Rational,
    b: &Rational,
    cap: u32,
) -> Option<usize> {
    let fc = translate(f, a, b);
    let gc = translate(g, a, b);
    let mut n = 2;
    while n <= cap {
        let h = truncated_dim(&fc, &gc, n);
        if h < n as usize && truncated_dim(&fc, &gc, n + 1) == h {
            return Some(h);
        }
        n *= 2;
    }
    None
}

/// Random polynomial with integer coefficients in `[-5, 5]` supported on
/// monomials of total degree in `[min_deg, max_deg]`.
pub fn random_poly(rng: &mut Lcg, min_deg: u32, max_deg: u32, terms: usize) -> BivarPoly {
    let mut out = Vec::new();
    for _ in 0..terms {
        let t = rng.int_in(min_deg as i64, max_deg as i64) as u32;
        let i = rng.int_in(0, t as i64) as u32;
        let c = rng.int_in(-5, 5);
        out.push(((i, t - i), FieldElem::int(c)));
    }
    BivarPoly::from_terms(out)
}

pub fn poly(t: &[(u32, u32, i64)]) -> BivarPoly {
    BivarPoly::from_int_terms(t)
}

pub fn ints(v: &[i64]) -> Vec<FieldElem> {
    v.iter().map(|&k| FieldElem::int(k)).collect()
}
