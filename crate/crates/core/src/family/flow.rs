use super::{FamilySkeleton, FamilyVertex};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;
use crate::rational::{rat, RatVec};

/// A directed acyclic graph with source and sink. Parallel arcs are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DagDesc {
    pub node_count: usize,
    pub arcs: Vec<(usize, usize)>,
    pub source: usize,
    pub sink: usize,
    topo: Vec<usize>,
    useful: Vec<bool>,
}

/// An s-t path: its arcs in path order and the nodes it visits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StPath {
    pub arcs: Vec<usize>,
    pub nodes: Vec<usize>,
}

impl DagDesc {
    /// Validates the graph and marks the arcs lying on some s-t path; all
    /// others are ignored by path enumeration and the decomposability test.
    pub fn new(node_count: usize, arcs: Vec<(usize, usize)>, source: usize, sink: usize) -> Result<Self> {
        if source >= node_count || sink >= node_count || source == sink {
            return Err(Error::InvalidInput(format!("bad source/sink {source}/{sink} for {node_count} nodes")));
        }
        if let Some(&(a, b)) = arcs.iter().find(|&&(a, b)| a >= node_count || b >= node_count || a == b) {
            return Err(Error::InvalidInput(format!("bad arc ({a},{b})")));
        }
        let mut indeg = vec![0usize; node_count];
        for &(_, b) in &arcs {
            indeg[b] += 1;
        }
        let mut topo = Vec::with_capacity(node_count);
        let mut ready: Vec<usize> = (0..node_count).filter(|&v| indeg[v] == 0).rev().collect();
        while let Some(u) = ready.pop() {
            topo.push(u);
            for &(a, b) in &arcs {
                if a == u {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.push(b);
                    }
                }
            }
        }
        if topo.len() != node_count {
            return Err(Error::InvalidInput("arcs contain a directed cycle".into()));
        }
        let mut from_s = vec![false; node_count];
        from_s[source] = true;
        for &u in &topo {
            if from_s[u] {
                for &(a, b) in &arcs {
                    if a == u {
                        from_s[b] = true;
                    }
                }
            }
        }
        let mut to_t = vec![false; node_count];
        to_t[sink] = true;
        for &u in topo.iter().rev() {
            if arcs.iter().any(|&(a, b)| a == u && to_t[b]) {
                to_t[u] = true;
            }
        }
        let useful = arcs.iter().map(|&(a, b)| from_s[a] && to_t[b]).collect();
        Ok(DagDesc { node_count, arcs, source, sink, topo, useful })
    }

    /// Number of s-t paths (saturating).
    pub fn path_count(&self) -> u128 {
        self.path_counts().0[self.sink]
    }

    /// Paths from `s` to each node and from each node to `t`.
    fn path_counts(&self) -> (Vec<u128>, Vec<u128>) {
        let n = self.node_count;
        let mut from_s = vec![0u128; n];
        from_s[self.source] = 1;
        for &u in &self.topo {
            for (i, &(a, b)) in self.arcs.iter().enumerate() {
                if a == u && self.useful[i] {
                    from_s[b] = from_s[b].saturating_add(from_s[u]);
                }
            }
        }
        let mut to_t = vec![0u128; n];
        to_t[self.sink] = 1;
        for &u in self.topo.iter().rev() {
            for (i, &(a, b)) in self.arcs.iter().enumerate() {
                if a == u && self.useful[i] {
                    to_t[u] = to_t[u].saturating_add(to_t[b]);
                }
            }
        }
        (from_s, to_t)
    }

    /// Characteristic vector of a path over all arcs.
    pub fn incidence_vector(&self, path: &StPath) -> RatVec {
        let mut x = vec![rat(0); self.arcs.len()];
        for &a in &path.arcs {
            x[a] = rat(1);
        }
        x
    }
}

/// All s-t paths by depth-first search, arcs tried in index order.
pub fn st_paths(d: &DagDesc, budget: &Budget) -> Result<Vec<StPath>> {
    let total = d.path_count();
    if total > budget.max_family_vertices as u128 {
        return Err(Error::TooLarge(format!("{total} s-t paths exceed the budget of {}", budget.max_family_vertices)));
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut arcs = Vec::new();
    let mut nodes = vec![d.source];
    dfs(d, d.source, &mut arcs, &mut nodes, &mut out);
    Ok(out)
}

fn dfs(d: &DagDesc, u: usize, arcs: &mut Vec<usize>, nodes: &mut Vec<usize>, out: &mut Vec<StPath>) {
    if u == d.sink {
        out.push(StPath { arcs: arcs.clone(), nodes: nodes.clone() });
        return;
    }
    for (i, &(a, b)) in d.arcs.iter().enumerate() {
        if a == u && d.useful[i] {
            arcs.push(i);
            nodes.push(b);
            dfs(d, b, arcs, nodes, out);
            arcs.pop();
            nodes.pop();
        }
    }
}

/// Adjacency on the flow polytope: the symmetric difference is two `x → y`
/// paths without common inner nodes, i.e. the paths split and merge once.
pub fn path_adjacent(p: &StPath, q: &StPath) -> bool {
    if p.arcs == q.arcs {
        return false;
    }
    let prefix = p.arcs.iter().zip(&q.arcs).take_while(|(a, b)| a == b).count();
    let room = p.arcs.len().min(q.arcs.len()) - prefix;
    let suffix = p.arcs.iter().rev().zip(q.arcs.iter().rev()).take(room).take_while(|(a, b)| a == b).count();
    // Inner nodes of the differing middle sections.
    let inner_p = &p.nodes[prefix + 1..p.nodes.len() - suffix - 1];
    let inner_q = &q.nodes[prefix + 1..q.nodes.len() - suffix - 1];
    inner_p.iter().all(|u| !inner_q.contains(u))
}

pub fn path_skeleton(d: &DagDesc, budget: &Budget) -> Result<FamilySkeleton> {
    let paths = st_paths(d, budget)?;
    let graph = SkeletonGraph::from_oracle(paths.len(), |i, j| path_adjacent(&paths[i], &paths[j]));
    Ok(FamilySkeleton::new(paths.into_iter().map(FamilyVertex::Path).collect(), graph))
}

/// Smallest inner node traversed by every s-t path, if any.
pub fn is_decomposable(d: &DagDesc) -> Option<usize> {
    let (from_s, to_t) = d.path_counts();
    let total = from_s[d.sink];
    if total == 0 {
        return None;
    }
    (0..d.node_count)
        .filter(|&v| v != d.source && v != d.sink)
        .find(|&v| from_s[v].saturating_mul(to_t[v]) == total)
}
