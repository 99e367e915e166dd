use std::collections::HashMap;

use itertools::Itertools;

use super::{FamilySkeleton, FamilyVertex};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;

/// An edge `(u, v)` of `K_n` with `u < v`.
pub type Edge = (usize, usize);

/// A spanning tree as its sorted edge list.
pub type Tree = Vec<Edge>;

fn check_tree_n(n: usize) -> Result<()> {
    if (3..=7).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("spanning trees supported for 3 <= n <= 7, got {n}")))
    }
}

/// All spanning trees of `K_n`, in lexicographic order of edge lists.
pub fn spanning_trees(n: usize) -> Result<Vec<Tree>> {
    check_tree_n(n)?;
    let edges: Vec<Edge> = (0..n).tuple_combinations().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n - 1);
    let comp: Vec<usize> = (0..n).collect();
    extend_forest(n, &edges, 0, &comp, &mut chosen, &mut out);
    Ok(out)
}

fn extend_forest(n: usize, edges: &[Edge], from: usize, comp: &[usize], chosen: &mut Vec<Edge>, out: &mut Vec<Tree>) {
    if chosen.len() == n - 1 {
        out.push(chosen.clone());
        return;
    }
    let needed = n - 1 - chosen.len();
    for i in from..edges.len() {
        if edges.len() - i < needed {
            break;
        }
        let (u, v) = edges[i];
        let (cu, cv) = (comp[u], comp[v]);
        if cu == cv {
            continue;
        }
        let merged: Vec<usize> = comp.iter().map(|&c| if c == cv { cu } else { c }).collect();
        chosen.push((u, v));
        extend_forest(n, edges, i + 1, &merged, chosen, out);
        chosen.pop();
    }
}

/// Adjacency on the spanning tree polytope: `|T Δ T'| = 2`.
pub fn tree_adjacent(a: &[Edge], b: &[Edge]) -> bool {
    a.len() == b.len() && a.iter().filter(|e| !b.contains(e)).count() == 1
}

/// Node sets on the two sides of `tree − e`, as a membership mask of the
/// side containing `e.0`.
fn side_of(n: usize, tree: &[Edge], removed: Edge) -> Vec<bool> {
    let mut side = vec![false; n];
    side[removed.0] = true;
    let mut stack = vec![removed.0];
    while let Some(u) = stack.pop() {
        for &(a, b) in tree {
            if (a, b) == removed {
                continue;
            }
            let w = if a == u { b } else if b == u { a } else { continue };
            if !side[w] {
                side[w] = true;
                stack.push(w);
            }
        }
    }
    side
}

/// Skeleton degree of a tree: removing `e` splits `a_e | n − a_e` nodes and
/// any of the other `a_e (n − a_e) − 1` crossing edges reconnects it.
pub fn tree_degree(n: usize, tree: &[Edge]) -> usize {
    tree.iter()
        .map(|&e| {
            let a = side_of(n, tree, e).iter().filter(|&&s| s).count();
            a * (n - a) - 1
        })
        .sum()
}

pub fn tree_skeleton_max_degree(n: usize) -> Result<usize> {
    Ok(spanning_trees(n)?.iter().map(|t| tree_degree(n, t)).max().unwrap_or(0))
}

/// Spanning tree skeleton built from edge exchanges.
pub fn tree_skeleton(n: usize, budget: &Budget) -> Result<FamilySkeleton> {
    check_tree_n(n)?;
    let count = n.pow(n as u32 - 2);
    if count as u64 > budget.max_family_vertices {
        return Err(Error::TooLarge(format!("{count} spanning trees exceed the budget")));
    }
    let trees = spanning_trees(n)?;
    let index: HashMap<&Tree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut edges = Vec::new();
    for (i, tree) in trees.iter().enumerate() {
        for &e in tree {
            let side = side_of(n, tree, e);
            for (u, v) in (0..n).tuple_combinations() {
                if side[u] == side[v] || (u, v) == e {
                    continue;
                }
                let mut other: Tree = tree.iter().copied().filter(|&f| f != e).collect();
                other.push((u, v));
                other.sort_unstable();
                let j = index[&other];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    let graph = SkeletonGraph::new(trees.len(), edges)?;
    Ok(FamilySkeleton::new(trees.into_iter().map(FamilyVertex::Tree).collect(), graph))
}

/// The path-plus-star tree: `s – w_1 – … – w_k – t` plus `{t, v}` for every
/// node `v` outside `W ∪ {s, t}`. `w` must have `⌊n/2⌋` distinct nodes other
/// than `s` and `t`; its order is the path order.
pub fn build_tw(n: usize, s: usize, t: usize, w: &[usize]) -> Result<Tree> {
    if s >= n || t >= n || s == t {
        return Err(Error::BadW(format!("invalid terminals s = {s}, t = {t} for n = {n}")));
    }
    if w.len() != n / 2 {
        return Err(Error::BadW(format!("|W| = {} but n/2 = {}", w.len(), n / 2)));
    }
    if w.iter().any(|&x| x >= n || x == s || x == t) || w.iter().duplicates().next().is_some() {
        return Err(Error::BadW(format!("W = {w:?} must be distinct nodes outside {{s, t}}")));
    }
    let mut path = vec![s];
    path.extend_from_slice(w);
    path.push(t);
    let mut tree: Tree = path.windows(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
    for v in 0..n {
        if !path.contains(&v) {
            tree.push((t.min(v), t.max(v)));
        }
    }
    tree.sort_unstable();
    Ok(tree)
}

/// The tree adjacent to `T(W)` obtained by short-cutting `w` at `y`: for the
/// subpath `x – y – z` of the s-t path, replace `{x, y}` by `{x, z}`, which
/// makes `y` a leaf.
pub fn tw_exchange(n: usize, s: usize, t: usize, w: &[usize], y: usize) -> Result<Tree> {
    let tree = build_tw(n, s, t, w)?;
    let p = w.iter().position(|&x| x == y).ok_or_else(|| Error::BadW(format!("{y} is not in W")))?;
    let mut path = vec![s];
    path.extend_from_slice(w);
    path.push(t);
    let (x, z) = (path[p], path[p + 2]);
    let mut out: Tree = tree.into_iter().filter(|&e| e != (x.min(y), x.max(y))).collect();
    out.push((x.min(z), x.max(z)));
    out.sort_unstable();
    Ok(out)
}

/// All `W ⊆ V ∖ {s, t}` with `|W| = ⌊n/2⌋`. Each set is listed in path
/// order: ascending, rotated left by `sum(W) mod |W|`. Ascending order alone
/// makes some `T(W)` adjacent (for n = 6, `{2,3,4}` and `{2,3,5}` differ in
/// one edge); the rotation keeps them pairwise non-adjacent.
pub fn w_sets(n: usize, s: usize, t: usize) -> Vec<Vec<usize>> {
    (0..n)
        .filter(|&v| v != s && v != t)
        .combinations(n / 2)
        .map(|mut w| {
            let shift = w.iter().sum::<usize>() % w.len();
            w.rotate_left(shift);
            w
        })
        .collect()
}

/// `E[U]`: edges with both endpoints in `U`.
pub fn induced_edges(edges: &[Edge], u: &[usize]) -> Vec<Edge> {
    edges.iter().copied().filter(|(a, b)| u.contains(a) && u.contains(b)).collect()
}

/// `δ(U)`: edges with exactly one endpoint in `U`.
pub fn cut_edges(edges: &[Edge], u: &[usize]) -> Vec<Edge> {
    edges.iter().copied().filter(|(a, b)| u.contains(a) != u.contains(b)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubtourStatus {
    Tight,
    Slack,
    Violated,
}

/// Compares `|T ∩ E[U]|` with `|U| − 1`.
pub fn subtour_facet_check(tree: &[Edge], u: &[usize]) -> Result<SubtourStatus> {
    if u.len() < 2 {
        return Err(Error::InvalidInput(format!("subtour set needs at least two nodes, got {u:?}")));
    }
    let inside = induced_edges(tree, u).len();
    Ok(match inside.cmp(&(u.len() - 1)) {
        std::cmp::Ordering::Equal => SubtourStatus::Tight,
        std::cmp::Ordering::Less => SubtourStatus::Slack,
        std::cmp::Ordering::Greater => SubtourStatus::Violated,
    })
}
