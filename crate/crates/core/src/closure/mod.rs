//! The common-neighbor operator `𝒩` and closure certificates.
//!
//! `𝒩(W)` adds every node outside `W` with two distinct neighbors in `W`.
//! By convention `𝒩(∅) = ∅`; certificates never use the empty seed.

mod cover;
mod sample;

pub use cover::{cover_lower_bound, maximal_proper_closed_sets, CoverMode, LowerBound};
pub use sample::{is_complete_01, sample_random_01, SampleConfig, SampleReport};

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;

/// One synchronous application of `𝒩`. Input need not be sorted; output is.
pub fn cn_step(g: &SkeletonGraph, w: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.node_count()];
    for &u in w {
        inside[u] = true;
    }
    let mut out: Vec<usize> = (0..g.node_count())
        .filter(|&v| inside[v] || g.neighbors(v).iter().filter(|&&u| inside[u]).count() >= 2)
        .collect();
    out.dedup();
    out
}

/// The least `𝒩`-closed superset of `w`, as a membership mask.
///
/// Worklist version: counts neighbors inside the growing set and admits a
/// node when its count reaches two. Same result as iterating [`cn_step`].
pub fn closure_mask(g: &SkeletonGraph, w: &[usize]) -> Vec<bool> {
    let n = g.node_count();
    let mut inside = vec![false; n];
    let mut count = vec![0u32; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &u in w {
        if !inside[u] {
            inside[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if inside[v] {
                continue;
            }
            count[v] += 1;
            if count[v] == 2 {
                inside[v] = true;
                queue.push_back(v);
            }
        }
    }
    inside
}

pub fn closure_set(g: &SkeletonGraph, w: &[usize]) -> Vec<usize> {
    mask_to_set(&closure_mask(g, w))
}

pub(crate) fn mask_to_set(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

pub fn is_closed(g: &SkeletonGraph, w: &[usize]) -> bool {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    cn_step(g, &sorted) == sorted
}

/// Pairwise graph distance at least 3 (singletons and `∅` qualify).
pub fn is_isolated(g: &SkeletonGraph, w: &[usize]) -> bool {
    let mut inside = vec![false; g.node_count()];
    for &u in w {
        inside[u] = true;
    }
    w.iter().all(|&u| {
        let dist = g.distances_from_bounded(u, 2);
        (0..g.node_count()).all(|v| v == u || !inside[v] || dist[v] > 2)
    })
}

/// A seed, its `𝒩` iterates and the verdict on the fixpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureCertificate {
    /// Fingerprint of the graph the certificate refers to.
    pub graph: String,
    pub seed: Vec<usize>,
    /// `trace[0]` is the seed, each next entry one `𝒩` step; the last entry
    /// is the fixpoint.
    pub trace: Vec<Vec<usize>>,
    pub trace_len: usize,
    #[serde(rename = "final")]
    pub final_set: Vec<usize>,
    pub proper: bool,
    pub isolated: bool,
}

pub fn closure(g: &SkeletonGraph, seed: &[usize]) -> Result<ClosureCertificate> {
    if seed.is_empty() {
        return Err(Error::InvalidInput("closure seeds must be nonempty".into()));
    }
    if let Some(&u) = seed.iter().find(|&&u| u >= g.node_count()) {
        return Err(Error::InvalidInput(format!("seed node {u} out of range")));
    }
    let mut current = seed.to_vec();
    current.sort_unstable();
    current.dedup();
    let mut trace = vec![current.clone()];
    loop {
        let next = cn_step(g, &current);
        if next == current {
            break;
        }
        trace.push(next.clone());
        current = next;
    }
    Ok(ClosureCertificate {
        graph: g.fingerprint(),
        seed: trace[0].clone(),
        proper: current.len() < g.node_count(),
        isolated: is_isolated(g, &current),
        final_set: current,
        trace_len: trace.len(),
        trace,
    })
}

/// A seed pair whose closure is not the whole node set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCounterexample {
    pub pair: (usize, usize),
    pub closure: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub graph: String,
    pub node_count: usize,
    /// Only pairs at graph distance at most this were seeded; `None` means
    /// all pairs.
    pub distance_filter: Option<usize>,
    pub pairs_checked: usize,
    pub full_pairs: usize,
    pub counterexamples: Vec<PairCounterexample>,
}

impl SweepReport {
    pub fn all_full(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// What a clean sweep proves. A proper closed set holding two nodes of a
    /// seeded pair would contain that pair's closure, which is everything.
    pub fn conclusion(&self) -> String {
        match (self.all_full(), self.distance_filter) {
            (false, _) => format!("{} seed pairs have proper closures", self.counterexamples.len()),
            (true, None) => "every pair closes to the full node set: all proper closed sets are singletons".into(),
            (true, Some(d)) if d >= 2 => {
                "every pair at distance <= 2 closes to the full node set: all proper closed sets are isolated".into()
            }
            (true, Some(d)) => format!("every pair at distance <= {d} closes to the full node set"),
        }
    }
}

/// Closes every pair (or every pair within `distance_filter`) in parallel.
/// Counterexamples are listed in pair order.
pub fn pair_closure_sweep(g: &SkeletonGraph, distance_filter: Option<usize>, budget: &Budget) -> Result<SweepReport> {
    let n = g.node_count();
    if n > budget.max_vertices {
        return Err(Error::TooLarge(format!("{n} nodes exceed the sweep budget of {}", budget.max_vertices)));
    }
    let pairs: Vec<(usize, usize)> = match distance_filter {
        Some(d) => g.pairs_within(d),
        None => {
            let total = n * n.saturating_sub(1) / 2;
            if total as u64 > budget.max_pairs {
                return Err(Error::TooLarge(format!("{total} pairs exceed the budget of {}", budget.max_pairs)));
            }
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
        }
    };
    if pairs.len() as u64 > budget.max_pairs {
        return Err(Error::TooLarge(format!("{} pairs exceed the budget of {}", pairs.len(), budget.max_pairs)));
    }
    let counterexamples: Vec<PairCounterexample> = pairs
        .par_iter()
        .filter_map(|&(u, v)| {
            let mask = closure_mask(g, &[u, v]);
            if mask.iter().all(|&b| b) {
                None
            } else {
                Some(PairCounterexample { pair: (u, v), closure: mask_to_set(&mask) })
            }
        })
        .collect();
    Ok(SweepReport {
        graph: g.fingerprint(),
        node_count: n,
        distance_filter,
        pairs_checked: pairs.len(),
        full_pairs: pairs.len() - counterexamples.len(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_examples() {
        let path = SkeletonGraph::path(3);
        assert_eq!(cn_step(&path, &[0, 2]), vec![0, 1, 2]);
        assert_eq!(cn_step(&path, &[1]), vec![1]);
        let tri = SkeletonGraph::complete(3);
        assert_eq!(cn_step(&tri, &[0, 1]), vec![0, 1, 2]);
        assert!(cn_step(&tri, &[]).is_empty());
    }

    #[test]
    fn hexagon_closures() {
        let hex = SkeletonGraph::cycle(6);
        let opposite = closure(&hex, &[1, 4]).unwrap();
        assert_eq!(opposite.final_set, vec![1, 4]);
        assert!(opposite.proper && opposite.isolated);
        assert_eq!(opposite.trace_len, 1);

        let gap = closure(&hex, &[0, 2]).unwrap();
        assert_eq!(gap.final_set, vec![0, 1, 2]);
        assert!(gap.proper && !gap.isolated);
        assert_eq!(closure_set(&hex, &[0, 2]), gap.final_set);

        assert_eq!(closure(&hex, &[0, 1, 2, 3, 4]).unwrap().final_set.len(), 6);
        assert!(closure(&hex, &[]).is_err());
    }

    #[test]
    fn isolation() {
        let hex = SkeletonGraph::cycle(6);
        assert!(is_isolated(&hex, &[2]));
        assert!(!is_isolated(&hex, &[0, 1]));
        assert!(!is_isolated(&hex, &[0, 2]));
        assert!(is_isolated(&hex, &[0, 3]));
        assert!(is_closed(&hex, &[0, 3]));
    }

    #[test]
    fn sweeps() {
        let k5 = SkeletonGraph::complete(5);
        let r = pair_closure_sweep(&k5, None, &Budget::default()).unwrap();
        assert!(r.all_full());
        assert_eq!(r.pairs_checked, 10);

        let hex = SkeletonGraph::cycle(6);
        let r = pair_closure_sweep(&hex, Some(2), &Budget::default()).unwrap();
        assert_eq!(r.pairs_checked, 12);
        assert_eq!(r.counterexamples.len(), 12);
        assert_eq!(r.counterexamples[0], PairCounterexample { pair: (0, 1), closure: vec![0, 1] });
    }
}
