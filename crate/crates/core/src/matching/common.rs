use serde::Serialize;

use super::{component_labels, good_matching_exists, goodness, is_adjacent, strip_common, Matching};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommonNeighborOutcome {
    PairwiseAdjacent,
    CommonNeighbor(Matching),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeCase {
    /// `f1 ∉ Mk` and `u2` precedes `v2` on the walk: `{u1,u2}, {v1,v2}`.
    Case1,
    /// Otherwise: `{u1,v2}, {u2,v1}`.
    Case2,
}

/// One component-merging exchange, in the caller's node labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeStep {
    /// Nodes of the component `Ĉ` holding the cycle edges of `M'`.
    pub component: Vec<usize>,
    /// Connecting edge `e = {u1, u2}` with `u1 ∈ Ĉ`.
    pub edge: (usize, usize),
    /// `e ∈ Mj \ Mk`.
    pub j: u8,
    pub case: ExchangeCase,
    pub removed: [(usize, usize); 2],
    pub added: [(usize, usize); 2],
    pub components_before: usize,
    pub components_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborTrace {
    pub outcome: CommonNeighborOutcome,
    /// Edges of `M1 ∩ M2 ∩ M3`, set aside before the search.
    pub stripped: Vec<(usize, usize)>,
    /// The starting good matching, in the caller's labels.
    pub initial: Option<Matching>,
    /// The adjacent-cycle construction hit its 4-cycle special case.
    pub l2_special_case: bool,
    pub steps: Vec<ExchangeStep>,
}

/// A perfect matching adjacent to all of `M1, M2, M3`, or the report that
/// the three are pairwise adjacent.
///
/// Starts from a good matching and merges `M3 ∪ M'` components one at a
/// time. Every iterate is re-checked for goodness and for the component
/// count dropping by exactly one; a violation is an
/// `InternalInvariantViolation`.
pub fn three_common_neighbor(m1: &Matching, m2: &Matching, m3: &Matching) -> Result<NeighborTrace> {
    if m1.node_count() != m3.node_count() || m2.node_count() != m3.node_count() {
        return Err(Error::DimensionMismatch("matchings on different node sets".into()));
    }
    if !is_adjacent(m1, m2) {
        return Err(Error::NotAdjacentBase);
    }
    if is_adjacent(m1, m3) && is_adjacent(m2, m3) {
        return Ok(NeighborTrace {
            outcome: CommonNeighborOutcome::PairwiseAdjacent,
            stripped: Vec::new(),
            initial: None,
            l2_special_case: false,
            steps: Vec::new(),
        });
    }

    let inst = strip_common(m1, m2, m3);
    let (a, b, c) = (&inst.m1, &inst.m2, &inst.m3);
    let l2_special_case = a.sym_diff_len(b) == 4;
    let mut mp = good_matching_exists(a, b, c)?;
    let initial = inst.reinsert(&mp);
    let n = a.node_count();
    let mut steps = Vec::new();

    loop {
        let labels = component_labels(c, &mp);
        let count = labels.iter().max().map_or(0, |&x| x + 1);
        if count <= 1 {
            break;
        }
        let in_cycle = |u: usize, v: usize| a.contains(u, v) != b.contains(u, v);
        let hat = (0..n)
            .find(|&u| in_cycle(u, mp.mate(u)))
            .or_else(|| (0..n).find(|&u| a.mate(u) != b.mate(u)))
            .map(|u| labels[u])
            .expect("V* is nonempty");

        // e ∈ Mj \ Mk leaving Ĉ, maximizing |Mj Δ M'|, then smallest j,
        // then smallest edge.
        let mut best: Option<(usize, u8, (usize, usize), usize, usize)> = None;
        for (j, mj, mk) in [(1u8, a, b), (2u8, b, a)] {
            let dj = mj.sym_diff_len(&mp);
            for u in 0..n {
                let w = mj.mate(u);
                if u > w || mk.contains(u, w) || (labels[u] == hat) == (labels[w] == hat) {
                    continue;
                }
                let (u1, u2) = if labels[u] == hat { (u, w) } else { (w, u) };
                let better = match &best {
                    None => true,
                    Some((bd, bj, be, _, _)) => dj > *bd || (dj == *bd && (j, (u, w)) < (*bj, *be)),
                };
                if better {
                    best = Some((dj, j, (u, w), u1, u2));
                }
            }
        }
        let Some((_, j, _, u1, u2)) = best else {
            return Err(Error::InternalInvariantViolation("no cycle edge leaves the marked component".into()));
        };
        let mk = if j == 1 { b } else { a };
        let v1 = mp.mate(u1);
        let v2 = mp.mate(u2);

        let case = if !mk.contains(u1, v1) && u2_before_v2(mk, &mp, u1, u2, v2) {
            ExchangeCase::Case1
        } else {
            ExchangeCase::Case2
        };
        let added = match case {
            ExchangeCase::Case1 => [(u1, u2), (v1, v2)],
            ExchangeCase::Case2 => [(u1, v2), (u2, v1)],
        };
        let mut next = mp.clone();
        next.replace([(u1, v1), (u2, v2)], added);

        let after = component_labels(c, &next).into_iter().max().map_or(0, |x| x + 1);
        if after + 1 != count {
            return Err(Error::InternalInvariantViolation(format!(
                "exchange changed the component count from {count} to {after}"
            )));
        }
        let report = goodness(&next, a, b, c)?;
        if !report.is_good() {
            return Err(Error::InternalInvariantViolation(format!(
                "exchange lost goodness: {:?}",
                report.failures
            )));
        }

        let lab = |(x, y): (usize, usize)| {
            let (p, q) = (inst.original_label(x), inst.original_label(y));
            (p.min(q), p.max(q))
        };
        steps.push(ExchangeStep {
            component: (0..n).filter(|&u| labels[u] == hat).map(|u| inst.original_label(u)).collect(),
            edge: lab((u1, u2)),
            j,
            case,
            removed: [lab((u1, v1)), lab((u2, v2))],
            added: [lab(added[0]), lab(added[1])],
            components_before: count,
            components_after: after,
        });
        mp = next;
    }

    let result = inst.reinsert(&mp);
    if !(is_adjacent(&result, m1) && is_adjacent(&result, m2) && is_adjacent(&result, m3)) {
        return Err(Error::InternalInvariantViolation("result is not adjacent to all three matchings".into()));
    }
    Ok(NeighborTrace {
        outcome: CommonNeighborOutcome::CommonNeighbor(result),
        stripped: inst.common,
        initial: Some(initial),
        l2_special_case,
        steps,
    })
}

/// Walks the single cycle of `Mk Δ M'` from `u1` along its `M'` edge and
/// reports whether `u2` is reached before `v2`.
fn u2_before_v2(mk: &Matching, mp: &Matching, u1: usize, u2: usize, v2: usize) -> bool {
    let mut u = u1;
    let mut on_mp = true;
    loop {
        u = if on_mp { mp.mate(u) } else { mk.mate(u) };
        on_mp = !on_mp;
        if u == u2 {
            return true;
        }
        if u == v2 {
            return false;
        }
        assert!(u != u1, "walk closed without meeting f2");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, edges: &[(usize, usize)]) -> Matching {
        let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Matching::from_edges(n, &e).unwrap()
    }

    #[test]
    fn k8_common_neighbor() {
        let m1 = m(8, &[(1, 2), (3, 4), (5, 6), (7, 8)]);
        let m2 = m(8, &[(1, 4), (2, 3), (5, 6), (7, 8)]);
        let m3 = m(8, &[(1, 5), (2, 6), (3, 7), (4, 8)]);
        let t = three_common_neighbor(&m1, &m2, &m3).unwrap();
        let CommonNeighborOutcome::CommonNeighbor(mp) = t.outcome else {
            panic!("expected a common neighbor");
        };
        for x in [&m1, &m2, &m3] {
            assert!(is_adjacent(&mp, x));
        }
        for w in t.steps.windows(2) {
            assert_eq!(w[0].components_after, w[1].components_before);
        }
    }

    #[test]
    fn k6_is_pairwise_adjacent() {
        let m1 = m(6, &[(1, 2), (3, 4), (5, 6)]);
        let m2 = m(6, &[(1, 4), (2, 3), (5, 6)]);
        let m3 = m(6, &[(1, 6), (2, 5), (3, 4)]);
        let t = three_common_neighbor(&m1, &m2, &m3).unwrap();
        assert_eq!(t.outcome, CommonNeighborOutcome::PairwiseAdjacent);
    }

    #[test]
    fn base_must_be_adjacent() {
        let m1 = m(8, &[(1, 2), (3, 4), (5, 6), (7, 8)]);
        let m2 = m(8, &[(1, 4), (2, 3), (5, 8), (6, 7)]);
        assert_eq!(three_common_neighbor(&m1, &m2, &m1).unwrap_err(), Error::NotAdjacentBase);
    }
}
