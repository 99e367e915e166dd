//! Vertex enumeration and adjacency oracles for hypersimplices, spanning
//! tree polytopes of `K_n`, s-t path (flow) polytopes of DAGs and perfect
//! matching polytopes of `K_{2n}`.

mod flow;
mod hypersimplex;
mod matchings;
mod trees;

pub use flow::{is_decomposable, path_adjacent, path_skeleton, st_paths, DagDesc, StPath};
pub use hypersimplex::{hypersimplex_adjacent, hypersimplex_skeleton, hypersimplex_vertices};
pub use matchings::{matching_adjacent, matching_skeleton, perfect_matching_count, perfect_matchings};
pub use trees::{
    build_tw, cut_edges, induced_edges, spanning_trees, subtour_facet_check, tree_adjacent, tree_degree, tw_exchange,
    tree_skeleton, tree_skeleton_max_degree, w_sets, Edge, SubtourStatus, Tree,
};

use crate::graph::SkeletonGraph;
use crate::matching::Matching;
use crate::rational::{rat, RatVec};

/// A combinatorial vertex of one of the four families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyVertex {
    BitVector(Vec<u8>),
    Tree(Tree),
    Path(StPath),
    Matching(Matching),
}

impl FamilyVertex {
    /// Human-readable label; trees and matchings use 1-based node names.
    pub fn label(&self) -> String {
        match self {
            FamilyVertex::BitVector(b) => b.iter().map(|x| x.to_string()).collect(),
            FamilyVertex::Tree(t) => edge_label(t),
            FamilyVertex::Path(p) => p.nodes.iter().map(|u| u.to_string()).collect::<Vec<_>>().join("-"),
            FamilyVertex::Matching(m) => edge_label(&m.edges()),
        }
    }
}

fn edge_label(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    format!("{{{}}}", parts.join(","))
}

/// Index of an edge `{u, v}` (`u < v`) of `K_n` in lexicographic order.
pub(crate) fn edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Characteristic vector of an edge set of `K_n` in lexicographic edge
/// order, as used for the geometric cross-checks.
pub fn edge_incidence_vector(n: usize, edges: &[(usize, usize)]) -> RatVec {
    let mut x = vec![rat(0); n * (n - 1) / 2];
    for &(u, v) in edges {
        x[edge_index(n, u.min(v), u.max(v))] = rat(1);
    }
    x
}

/// A family skeleton with its vertices.
#[derive(Debug, Clone)]
pub struct FamilySkeleton {
    pub vertices: Vec<FamilyVertex>,
    pub graph: SkeletonGraph,
}

impl FamilySkeleton {
    pub(crate) fn new(vertices: Vec<FamilyVertex>, graph: SkeletonGraph) -> Self {
        let labels = vertices.iter().map(FamilyVertex::label).collect();
        FamilySkeleton { vertices, graph: graph.with_labels(labels) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_indices_are_lexicographic() {
        let n = 5;
        let mut expect = 0;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(edge_index(n, u, v), expect);
                expect += 1;
            }
        }
    }

    #[test]
    fn labels() {
        assert_eq!(FamilyVertex::BitVector(vec![1, 0, 1]).label(), "101");
        assert_eq!(FamilyVertex::Tree(vec![(0, 2), (1, 2)]).label(), "{1-3,2-3}");
    }
}
