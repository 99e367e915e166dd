//! Dense exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::{Rat, RatVec};

/// Reduced row echelon form of `rows` (each of length `ncols`).
///
/// Returns the nonzero reduced rows and their pivot columns. Pivots are
/// chosen left to right, first nonzero row wins, so the result is
/// deterministic for a given input order.
pub fn rref(rows: &[RatVec], ncols: usize) -> (Vec<RatVec>, Vec<usize>) {
    let mut m: Vec<RatVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[RatVec], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn null_space(rows: &[RatVec], ncols: usize) -> Vec<RatVec> {
    let (red, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b` when the solution is unique; `None` if the system is
/// singular or inconsistent. `A` may have more rows than columns.
pub fn solve_unique(a: &[RatVec], b: &[Rat], ncols: usize) -> Option<RatVec> {
    let aug: Vec<RatVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) || pivots.len() != ncols {
        return None;
    }
    Some(red.iter().map(|row| row[ncols].clone()).collect())
}

/// Some solution of `A x = b`, or `None` if inconsistent.
pub fn solve_any(a: &[RatVec], b: &[Rat], ncols: usize) -> Option<RatVec> {
    let aug: Vec<RatVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// A basis of the row space, taken from the reduced echelon form.
pub fn row_basis(rows: &[RatVec], ncols: usize) -> Vec<RatVec> {
    rref(rows, ncols).0
}

/// Affine rank of a point set: rank of `{p_i - p_0}`. Returns `None` for
/// the empty set.
pub fn affine_rank(points: &[RatVec]) -> Option<usize> {
    let first = points.first()?;
    let n = first.len();
    let diffs: Vec<RatVec> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(x, y)| x - y).collect())
        .collect();
    Some(rank(&diffs, n))
}
