use rayon::prelude::*;

use super::{FamilySkeleton, FamilyVertex};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;
use crate::matching::{is_adjacent, Matching};

fn check_nodes(nodes: usize) -> Result<()> {
    if nodes >= 2 && nodes <= 10 && nodes % 2 == 0 {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("perfect matchings supported on 2, 4, ..., 10 nodes, got {nodes}")))
    }
}

/// `(2n)! / (n! 2^n)`, the number of perfect matchings of `K_{2n}`.
pub fn perfect_matching_count(nodes: usize) -> u64 {
    (1..nodes as u64).step_by(2).product()
}

/// All perfect matchings of `K_nodes`, in lexicographic order of their
/// sorted edge lists.
pub fn perfect_matchings(nodes: usize) -> Result<Vec<Matching>> {
    check_nodes(nodes)?;
    let mut out = Vec::new();
    let mut mate = vec![usize::MAX; nodes];
    extend(&mut mate, &mut out);
    Ok(out)
}

fn extend(mate: &mut Vec<usize>, out: &mut Vec<Matching>) {
    let Some(u) = mate.iter().position(|&m| m == usize::MAX) else {
        out.push(Matching::from_mates(mate.clone()).expect("complete assignment"));
        return;
    };
    for v in u + 1..mate.len() {
        if mate[v] == usize::MAX {
            mate[u] = v;
            mate[v] = u;
            extend(mate, out);
            mate[u] = usize::MAX;
            mate[v] = usize::MAX;
        }
    }
}

/// Adjacency on the perfect matching polytope: one alternating cycle.
pub fn matching_adjacent(a: &Matching, b: &Matching) -> bool {
    is_adjacent(a, b)
}

pub fn matching_skeleton(nodes: usize, budget: &Budget) -> Result<FamilySkeleton> {
    check_nodes(nodes)?;
    let count = perfect_matching_count(nodes) as usize;
    if count as u64 > budget.max_family_vertices {
        return Err(Error::TooLarge(format!("{count} perfect matchings exceed the budget")));
    }
    let all = perfect_matchings(nodes)?;
    let edges: Vec<(usize, usize)> = (0..all.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let all = &all;
            (i + 1..all.len()).filter(move |&j| is_adjacent(&all[i], &all[j])).map(move |j| (i, j))
        })
        .collect();
    let graph = SkeletonGraph::new(all.len(), edges)?;
    Ok(FamilySkeleton::new(all.into_iter().map(FamilyVertex::Matching).collect(), graph))
}
