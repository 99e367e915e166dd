//! Polytope graphs (1-skeletons) as simple undirected graphs.

use std::collections::VecDeque;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// A simple undirected graph on nodes `0..n`, with optional display labels
/// (vertex coordinates, edge lists of trees, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl SkeletonGraph {
    pub fn new(node_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); node_count];
        for (u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::InvalidInput(format!("edge ({u},{v}) out of range for {node_count} nodes")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at node {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in adjacency.iter_mut() {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(SkeletonGraph { adjacency, labels: None })
    }

    /// Builds the graph from a symmetric adjacency oracle over all pairs.
    pub fn from_oracle(node_count: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut edges = Vec::new();
        for u in 0..node_count {
            for v in (u + 1)..node_count {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        SkeletonGraph::new(node_count, edges).expect("oracle pairs are in range")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.node_count());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.node_count();
        self.adjacency.iter().all(|nbrs| nbrs.len() + 1 == n)
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable nodes.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        self.distances_from_bounded(src, usize::MAX)
    }

    /// BFS distances from `src`, exploring at most `limit` levels.
    pub fn distances_from_bounded(&self, src: usize, limit: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.node_count()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= limit {
                continue;
            }
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.distances_from(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() == 0 || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// Unordered pairs `u < v` at graph distance at most `max_dist`.
    pub fn pairs_within(&self, max_dist: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.node_count() {
            let dist = self.distances_from_bounded(u, max_dist);
            out.extend((u + 1..self.node_count()).filter(|&v| dist[v] <= max_dist).map(|v| (u, v)));
        }
        out
    }

    /// Hex SHA-256 of the canonical edge list; identifies the graph in
    /// certificates.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.node_count() as u64).to_le_bytes());
        for (u, v) in self.edges() {
            h.update((u as u64).to_le_bytes());
            h.update((v as u64).to_le_bytes());
        }
        hex::encode(h.finalize())
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        SkeletonGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        SkeletonGraph::from_oracle(n, |_, _| true)
    }

    pub fn path(n: usize) -> Self {
        SkeletonGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }
}
