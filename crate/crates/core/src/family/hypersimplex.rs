use itertools::Itertools;

use super::{FamilySkeleton, FamilyVertex};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;
use crate::polytope::enumerate::binomial;

/// All 0/1-vectors of length `n` with exactly `k` ones, in lexicographic
/// order.
pub fn hypersimplex_vertices(n: usize, k: usize) -> Result<Vec<Vec<u8>>> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n-1, got n = {n}, k = {k}")));
    }
    let mut out: Vec<Vec<u8>> = (0..n)
        .combinations(k)
        .map(|ones| {
            let mut v = vec![0u8; n];
            for i in ones {
                v[i] = 1;
            }
            v
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Vertices of a hypersimplex are adjacent iff they differ in exactly two
/// coordinates.
pub fn hypersimplex_adjacent(u: &[u8], w: &[u8]) -> bool {
    u.len() == w.len() && u.iter().zip(w).filter(|(a, b)| a != b).count() == 2
}

pub fn hypersimplex_skeleton(n: usize, k: usize, budget: &Budget) -> Result<FamilySkeleton> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n-1, got n = {n}, k = {k}")));
    }
    let count = binomial(n as u64, k as u64);
    if count > budget.max_family_vertices as u64 {
        return Err(Error::TooLarge(format!("C({n},{k}) = {count} vertices exceed the budget")));
    }
    let verts = hypersimplex_vertices(n, k)?;
    let graph = SkeletonGraph::from_oracle(verts.len(), |i, j| hypersimplex_adjacent(&verts[i], &verts[j]));
    Ok(FamilySkeleton::new(verts.into_iter().map(FamilyVertex::BitVector).collect(), graph))
}
