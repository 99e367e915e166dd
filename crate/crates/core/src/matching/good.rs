use super::{adjacent_cycle_matching, component_labels, is_adjacent, Matching};
use crate::error::{Error, Result};

/// Evaluation of the five goodness properties of a candidate matching `M'`
/// relative to `(M1, M2, M3)`:
///
/// - (A) `M'` is adjacent to `M1` and `M2`;
/// - (B) every component of `M3 ∪ M'` touches `V* = V(M1 Δ M2)`;
/// - (C) the edges of `M' ∩ (M1 Δ M2)` all lie in one such component;
/// - (D) `M3 ≠ M'` and `c ≤ ½|M1 Δ M'| + ½|M2 Δ M'| − 3`;
/// - (E) `c ≤ ½|Mj Δ M'|` for `j = 1, 2`, with equality only if
///   `V(Mk Δ M') ⊇ V*` for the other index `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodnessReport {
    pub adjacency: bool,
    pub components_touch: bool,
    pub cycle_edges_together: bool,
    pub component_sum: bool,
    pub nodes_covered: bool,
    pub component_count: usize,
    /// `(property letter, explanation)` for every failed property.
    pub failures: Vec<(char, String)>,
}

impl GoodnessReport {
    pub fn is_good(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn goodness(mp: &Matching, m1: &Matching, m2: &Matching, m3: &Matching) -> Result<GoodnessReport> {
    if !is_adjacent(m1, m2) {
        return Err(Error::NotAdjacentBase);
    }
    let n = m1.node_count();
    let star: Vec<bool> = (0..n).map(|u| m1.mate(u) != m2.mate(u)).collect();
    let labels = component_labels(m3, mp);
    let c = labels.iter().max().map_or(0, |&x| x + 1);
    let mut failures = Vec::new();

    let adjacency = is_adjacent(mp, m1) && is_adjacent(mp, m2);
    if !adjacency {
        failures.push(('A', format!("adjacent to M1: {}, to M2: {}", is_adjacent(mp, m1), is_adjacent(mp, m2))));
    }

    let mut touches = vec![false; c];
    for u in 0..n {
        if star[u] {
            touches[labels[u]] = true;
        }
    }
    let components_touch = touches.iter().all(|&t| t);
    if let Some(bad) = touches.iter().position(|&t| !t) {
        let nodes: Vec<usize> = (0..n).filter(|&u| labels[u] == bad).collect();
        failures.push(('B', format!("component {nodes:?} misses V*")));
    }

    let in_cycle = |u: usize, v: usize| m1.contains(u, v) != m2.contains(u, v);
    let cycle_labels: Vec<usize> = mp.edges().into_iter().filter(|&(u, v)| in_cycle(u, v)).map(|(u, _)| labels[u]).collect();
    let cycle_edges_together = cycle_labels.windows(2).all(|w| w[0] == w[1]);
    if !cycle_edges_together {
        failures.push(('C', "edges of M' on the M1-M2 cycle lie in different components".into()));
    }

    let d1 = mp.sym_diff_len(m1);
    let d2 = mp.sym_diff_len(m2);
    let component_sum = mp != m3 && 2 * c + 6 <= d1 + d2;
    if !component_sum {
        failures.push(('D', format!("M3 = M': {}, c = {c}, |M1ΔM'| = {d1}, |M2ΔM'| = {d2}", mp == m3)));
    }

    let covers_star = |mk: &Matching| (0..n).all(|u| !star[u] || mk.mate(u) != mp.mate(u));
    let mut nodes_covered = true;
    for (dj, mk) in [(d1, m2), (d2, m1)] {
        if 2 * c > dj || (2 * c == dj && !covers_star(mk)) {
            nodes_covered = false;
        }
    }
    if !nodes_covered {
        failures.push(('E', format!("c = {c}, |M1ΔM'| = {d1}, |M2ΔM'| = {d2}")));
    }

    Ok(GoodnessReport {
        adjacency,
        components_touch,
        cycle_edges_together,
        component_sum,
        nodes_covered,
        component_count: c,
        failures,
    })
}

/// An instance with the nodes of `M1 ∩ M2 ∩ M3` deleted and the remaining
/// nodes relabelled `0..`, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrippedInstance {
    pub m1: Matching,
    pub m2: Matching,
    pub m3: Matching,
    /// Original label of each kept node.
    pub kept: Vec<usize>,
    /// The removed common edges, in original labels.
    pub common: Vec<(usize, usize)>,
    /// Every node was stripped (all three matchings coincide).
    pub degenerate: bool,
}

impl StrippedInstance {
    /// Lifts a matching of the restricted instance back to the original
    /// labels by adding the common edges.
    pub fn reinsert(&self, m: &Matching) -> Matching {
        let n = self.kept.len() + 2 * self.common.len();
        let mut mate = vec![0; n];
        for (i, &orig) in self.kept.iter().enumerate() {
            mate[orig] = self.kept[m.mate(i)];
        }
        for &(u, v) in &self.common {
            mate[u] = v;
            mate[v] = u;
        }
        Matching::from_mates(mate).expect("reinsertion is a bijection")
    }

    pub fn original_label(&self, u: usize) -> usize {
        self.kept[u]
    }
}

pub fn strip_common(m1: &Matching, m2: &Matching, m3: &Matching) -> StrippedInstance {
    let n = m1.node_count();
    let shared = |u: usize| m1.mate(u) == m2.mate(u) && m2.mate(u) == m3.mate(u);
    let kept: Vec<usize> = (0..n).filter(|&u| !shared(u)).collect();
    let common: Vec<(usize, usize)> = (0..n).filter(|&u| shared(u) && u < m1.mate(u)).map(|u| (u, m1.mate(u))).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &u) in kept.iter().enumerate() {
        index[u] = i;
    }
    let restrict = |m: &Matching| {
        Matching::from_mates(kept.iter().map(|&u| index[m.mate(u)]).collect()).expect("kept nodes are matched among themselves")
    };
    StrippedInstance {
        m1: restrict(m1),
        m2: restrict(m2),
        m3: restrict(m3),
        degenerate: kept.is_empty(),
        kept,
        common,
    }
}

/// A good matching for `M1 ~ M2`, `M1 ∩ M2 ∩ M3 = ∅`, `M3` not adjacent to
/// both: start from the adjacent-cycle matching `M̄` and splice every
/// `M3`-`M̄` cycle that avoids `V*` into the cycle through an `M̄` edge
/// `{u_0, v_0}` inside `V*`, replacing `{u_i, v_i}` by `{u_i, v_{i+1}}`.
pub fn good_matching_exists(m1: &Matching, m2: &Matching, m3: &Matching) -> Result<Matching> {
    if !is_adjacent(m1, m2) {
        return Err(Error::NotAdjacentBase);
    }
    if is_adjacent(m1, m3) && is_adjacent(m2, m3) {
        return Err(Error::PairwiseAdjacent);
    }
    let n = m1.node_count();
    if (0..n).any(|u| m1.mate(u) == m2.mate(u) && m2.mate(u) == m3.mate(u)) {
        return Err(Error::InvalidInput("M1, M2, M3 share an edge; strip it first".into()));
    }
    let base = adjacent_cycle_matching(m1, m2)?;
    let bar = base.matching;
    let star: Vec<bool> = (0..n).map(|u| m1.mate(u) != m2.mate(u)).collect();

    let labels = component_labels(m3, &bar);
    let count = labels.iter().max().map_or(0, |&c| c + 1);
    let mut touches = vec![false; count];
    for u in 0..n {
        if star[u] {
            touches[labels[u]] = true;
        }
    }
    // Components are numbered by smallest node, so the first node seen in
    // each outer component is its smallest.
    let mut spliced: Vec<(usize, usize)> = vec![(base.cycle[0], bar.mate(base.cycle[0]))];
    let mut done = vec![false; count];
    for u in 0..n {
        let c = labels[u];
        if !touches[c] && !done[c] {
            done[c] = true;
            spliced.push((u, bar.mate(u)));
        }
    }

    let mut mate = bar.mates().to_vec();
    let s = spliced.len();
    if s > 1 {
        for i in 0..s {
            let (ui, _) = spliced[i];
            let (_, vnext) = spliced[(i + 1) % s];
            mate[ui] = vnext;
            mate[vnext] = ui;
        }
    }
    let mp = Matching::from_mates(mate).map_err(|e| Error::InternalInvariantViolation(format!("splice broke the matching: {e}")))?;
    let report = goodness(&mp, m1, m2, m3)?;
    if !report.is_good() {
        return Err(Error::InternalInvariantViolation(format!("constructed matching is not good: {:?}", report.failures)));
    }
    Ok(mp)
}
