//! Perfect matchings of complete graphs, their alternating-cycle structure,
//! and the constructive common-neighbor algorithm for three matchings.

mod common;
mod cycle;
mod good;

pub use common::{three_common_neighbor, CommonNeighborOutcome, ExchangeCase, ExchangeStep, NeighborTrace};
pub use cycle::{adjacent_cycle_matching, AdjacentCycleMatching};
pub use good::{goodness, good_matching_exists, strip_common, GoodnessReport, StrippedInstance};

use crate::error::{Error, Result};

/// A perfect matching on nodes `0..2n`, stored as a mate array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if node_count % 2 != 0 {
            return Err(Error::InvalidInput(format!("odd node count {node_count}")));
        }
        let mut mate = vec![usize::MAX; node_count];
        for &(u, v) in edges {
            if u >= node_count || v >= node_count || u == v {
                return Err(Error::InvalidInput(format!("bad matching edge ({u},{v})")));
            }
            if mate[u] != usize::MAX || mate[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("node covered twice by edge ({u},{v})")));
            }
            mate[u] = v;
            mate[v] = u;
        }
        if let Some(u) = mate.iter().position(|&m| m == usize::MAX) {
            return Err(Error::InvalidInput(format!("node {u} is not matched")));
        }
        Ok(Matching { mate })
    }

    pub fn from_mates(mate: Vec<usize>) -> Result<Self> {
        let n = mate.len();
        for (u, &v) in mate.iter().enumerate() {
            if v >= n || v == u || mate[v] != u {
                return Err(Error::InvalidInput(format!("mate array is not an involution at node {u}")));
            }
        }
        Ok(Matching { mate })
    }

    pub fn node_count(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, u: usize) -> usize {
        self.mate[u]
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.mate[u] == v
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len()).filter(|&u| u < self.mate[u]).map(|u| (u, self.mate[u])).collect()
    }

    /// Number of edges in the symmetric difference with `other`.
    pub fn sym_diff_len(&self, other: &Matching) -> usize {
        2 * (0..self.mate.len()).filter(|&u| u < self.mate[u] && other.mate[u] != self.mate[u]).count()
    }

    /// Nodes covered by the symmetric difference with `other`.
    pub fn sym_diff_nodes(&self, other: &Matching) -> Vec<usize> {
        (0..self.mate.len()).filter(|&u| self.mate[u] != other.mate[u]).collect()
    }

    pub(crate) fn replace(&mut self, remove: [(usize, usize); 2], add: [(usize, usize); 2]) {
        for (u, v) in remove {
            debug_assert_eq!(self.mate[u], v);
            self.mate[u] = usize::MAX;
            self.mate[v] = usize::MAX;
        }
        for (u, v) in add {
            self.mate[u] = v;
            self.mate[v] = u;
        }
        debug_assert!(self.mate.iter().all(|&m| m != usize::MAX));
    }
}

/// The cycles of `M1 Δ M2`. Each cycle starts at its smallest node `v_0`
/// and continues `v_1 = M1-mate(v_0)`, `v_2 = M2-mate(v_1)`, and so on, so
/// `{v_{2i}, v_{2i+1}} ∈ M1` and `{v_{2i+1}, v_{2i+2}} ∈ M2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub common: Vec<(usize, usize)>,
}

pub fn sym_diff_cycles(m1: &Matching, m2: &Matching) -> Result<AlternatingDecomposition> {
    if m1.node_count() != m2.node_count() {
        return Err(Error::DimensionMismatch(format!(
            "matchings on {} and {} nodes",
            m1.node_count(),
            m2.node_count()
        )));
    }
    let n = m1.node_count();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    let mut common = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        if m1.mate(start) == m2.mate(start) {
            seen[start] = true;
            seen[m1.mate(start)] = true;
            common.push((start, m1.mate(start)));
            continue;
        }
        let mut cycle = Vec::new();
        let mut u = start;
        loop {
            cycle.push(u);
            seen[u] = true;
            let w = m1.mate(u);
            cycle.push(w);
            seen[w] = true;
            u = m2.mate(w);
            if u == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(AlternatingDecomposition { cycles, common })
}

/// Adjacency on the perfect matching polytope: `M1 Δ M2` is one cycle.
pub fn is_adjacent(m1: &Matching, m2: &Matching) -> bool {
    // Walk the cycle through the first differing node and check that it
    // covers every differing node.
    let n = m1.node_count();
    let Some(start) = (0..n).find(|&u| m1.mate(u) != m2.mate(u)) else {
        return false;
    };
    let differing = (0..n).filter(|&u| m1.mate(u) != m2.mate(u)).count();
    let mut len = 0;
    let mut u = start;
    loop {
        len += 2;
        u = m2.mate(m1.mate(u));
        if u == start {
            break;
        }
    }
    len == differing
}

/// Connected components of the multigraph `M3 ∪ M'`, each as a sorted node
/// list, ordered by smallest node. A shared edge is a 2-node component.
pub fn components(m3: &Matching, mp: &Matching) -> Vec<Vec<usize>> {
    let labels = component_labels(m3, mp);
    let count = labels.iter().max().map_or(0, |&c| c + 1);
    let mut out = vec![Vec::new(); count];
    for (u, &c) in labels.iter().enumerate() {
        out[c].push(u);
    }
    out
}

/// Component index of every node; components numbered by smallest node.
pub(crate) fn component_labels(m3: &Matching, mp: &Matching) -> Vec<usize> {
    let n = m3.node_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut u = start;
        loop {
            label[u] = next;
            let w = m3.mate(u);
            label[w] = next;
            u = mp.mate(w);
            if u == start {
                break;
            }
        }
        next += 1;
    }
    label
}

pub fn component_count(m3: &Matching, mp: &Matching) -> usize {
    component_labels(m3, mp).into_iter().max().map_or(0, |c| c + 1)
}
