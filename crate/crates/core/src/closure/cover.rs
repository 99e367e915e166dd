use std::collections::HashSet;

use serde::Serialize;

use super::{pair_closure_sweep, SweepReport};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverMode {
    /// Minimum number of proper closed sets covering all nodes.
    Exact,
    /// `|V|`, valid when every pair closes to the full node set.
    SingletonShortcut,
    /// Maximum degree plus one, valid when every pair at distance at most
    /// two closes to the full node set.
    DegreeBound,
}

/// A lower bound on the number of facets of any simple extension, with the
/// evidence that justifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub mode: CoverMode,
    pub bound: usize,
    /// Exact mode: an optimal cover by maximal proper closed sets.
    pub cover: Option<Vec<Vec<usize>>>,
    /// Exact mode: how many maximal proper closed sets exist.
    pub maximal_sets: Option<usize>,
    /// Shortcut modes: the sweep the bound rests on.
    pub sweep: Option<SweepReport>,
    /// Degree mode: a node of maximum degree.
    pub max_degree_node: Option<usize>,
}

pub fn cover_lower_bound(g: &SkeletonGraph, mode: CoverMode, budget: &Budget) -> Result<LowerBound> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::InvalidInput("a cover by proper closed sets needs at least two nodes".into()));
    }
    match mode {
        CoverMode::Exact => {
            let maximal = maximal_masks(g, budget)?;
            let cover = minimum_cover(n, &maximal);
            Ok(LowerBound {
                mode,
                bound: cover.len(),
                cover: Some(cover.iter().map(|&m| mask_nodes(m, n)).collect()),
                maximal_sets: Some(maximal.len()),
                sweep: None,
                max_degree_node: None,
            })
        }
        CoverMode::SingletonShortcut => {
            let sweep = pair_closure_sweep(g, None, budget)?;
            if !sweep.all_full() {
                return Err(Error::ModeInapplicable(format!(
                    "pair {:?} has the proper closure {:?}",
                    sweep.counterexamples[0].pair, sweep.counterexamples[0].closure
                )));
            }
            Ok(LowerBound { mode, bound: n, cover: None, maximal_sets: None, sweep: Some(sweep), max_degree_node: None })
        }
        CoverMode::DegreeBound => {
            let sweep = pair_closure_sweep(g, Some(2), budget)?;
            if !sweep.all_full() {
                return Err(Error::ModeInapplicable(format!(
                    "pair {:?} at distance <= 2 has the proper closure {:?}",
                    sweep.counterexamples[0].pair, sweep.counterexamples[0].closure
                )));
            }
            let node = (0..n).max_by_key(|&u| (g.degree(u), std::cmp::Reverse(u))).expect("nonempty graph");
            Ok(LowerBound {
                mode,
                bound: g.degree(node) + 1,
                cover: None,
                maximal_sets: None,
                sweep: Some(sweep),
                max_degree_node: Some(node),
            })
        }
    }
}

fn mask_nodes(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&u| mask >> u & 1 == 1).collect()
}

fn closure_bits(nbr: &[u64], mut w: u64) -> u64 {
    loop {
        let mut next = w;
        for (v, &nb) in nbr.iter().enumerate() {
            if w >> v & 1 == 0 && (nb & w).count_ones() >= 2 {
                next |= 1 << v;
            }
        }
        if next == w {
            return w;
        }
        w = next;
    }
}

/// All inclusion-maximal proper `𝒩`-closed sets, sorted by node list.
///
/// Explores closed sets upward from the singletons: every closed set is
/// reached by repeatedly adding one of its nodes and closing.
pub fn maximal_proper_closed_sets(g: &SkeletonGraph, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let n = g.node_count();
    let masks = maximal_masks(g, budget)?;
    Ok(masks.into_iter().map(|m| mask_nodes(m, n)).collect())
}

fn maximal_masks(g: &SkeletonGraph, budget: &Budget) -> Result<Vec<u64>> {
    let n = g.node_count();
    if n > budget.max_exact_nodes.min(64) {
        return Err(Error::TooLarge(format!("{n} nodes exceed the exact-cover budget of {}", budget.max_exact_nodes)));
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let nbr: Vec<u64> = (0..n).map(|u| g.neighbors(u).iter().fold(0u64, |acc, &v| acc | 1 << v)).collect();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut stack: Vec<u64> = (0..n).map(|u| 1u64 << u).collect();
    seen.extend(stack.iter().copied());
    let mut maximal = Vec::new();
    while let Some(c) = stack.pop() {
        let mut is_max = true;
        for v in 0..n {
            if c >> v & 1 == 1 {
                continue;
            }
            let d = closure_bits(&nbr, c | 1 << v);
            if d == full {
                continue;
            }
            is_max = false;
            if seen.insert(d) {
                if seen.len() > budget.max_closed_sets {
                    return Err(Error::TooLarge(format!(
                        "more than {} proper closed sets",
                        budget.max_closed_sets
                    )));
                }
                stack.push(d);
            }
        }
        if is_max {
            maximal.push(c);
        }
    }
    maximal.sort_by_key(|&m| mask_nodes(m, n));
    Ok(maximal)
}

/// Minimum set cover by branch and bound: branch on the sets containing the
/// smallest uncovered node, largest first, pruning against the best cover
/// found so far (seeded greedily).
fn minimum_cover(n: usize, sets: &[u64]) -> Vec<u64> {
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut order: Vec<u64> = sets.to_vec();
    order.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), mask_nodes(m, n)));

    let mut greedy = Vec::new();
    let mut covered = 0u64;
    while covered != full {
        let best = *order.iter().max_by_key(|&&m| ((m & !covered).count_ones(), std::cmp::Reverse(mask_nodes(m, n)))).unwrap();
        greedy.push(best);
        covered |= best;
    }
    let largest = order.first().map_or(1, |m| m.count_ones().max(1));
    let mut best = greedy;
    let mut current = Vec::new();
    search(full, 0, &order, largest, &mut current, &mut best);
    best
}

fn search(full: u64, covered: u64, sets: &[u64], largest: u32, current: &mut Vec<u64>, best: &mut Vec<u64>) {
    if covered == full {
        if current.len() < best.len() {
            *best = current.clone();
        }
        return;
    }
    let remaining = (full & !covered).count_ones();
    let lower = current.len() + remaining.div_ceil(largest) as usize;
    if lower >= best.len() {
        return;
    }
    let u = (full & !covered).trailing_zeros();
    for &m in sets {
        if m >> u & 1 == 1 {
            current.push(m);
            search(full, covered | m, sets, largest, current, best);
            current.pop();
        }
    }
}
