use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{FaceLattice, VPolytope};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::{add, format_rat, scale, Rat};

/// Whether `[v_i, v_j]` is an edge of `conv(V)`.
///
/// The midpoint of an edge has only representations supported on the
/// edge's endpoints; any other segment between vertices meets the relative
/// interior of a face with further vertices. So the pair is an edge iff the
/// weight that a convex representation of the midpoint can put on the other
/// vertices is zero at the optimum.
pub fn v_adjacency(v: &VPolytope, i: usize, j: usize) -> bool {
    assert!(i != j && i < v.len() && j < v.len(), "invalid vertex pair ({i},{j})");
    let pts = v.vertices();
    let mid = scale(&add(&pts[i], &pts[j]), &Rat::new(1.into(), 2.into()));
    let mut lp = LinearProgram::new(pts.len());
    for coord in 0..v.ambient_dim {
        let row = pts.iter().map(|p| p[coord].clone()).collect();
        lp.constrain(row, Relation::Eq, mid[coord].clone());
    }
    lp.constrain(vec![Rat::one(); pts.len()], Relation::Eq, Rat::one());
    let objective = (0..pts.len()).map(|k| if k == i || k == j { Rat::zero() } else { Rat::one() }).collect();
    lp.set_objective(objective);
    match lp.maximize() {
        LpOutcome::Optimal { value, .. } => value.is_zero(),
        other => unreachable!("midpoint LP is feasible and bounded, got {other:?}"),
    }
}

/// The graph of `conv(V)` by one LP per vertex pair. Node `i` is the
/// `i`-th vertex of `V` and is labelled with its coordinates.
pub fn skeleton(v: &VPolytope, budget: &Budget) -> Result<SkeletonGraph> {
    let n = v.len();
    if n > budget.max_vertices {
        return Err(Error::TooLarge(format!("{n} vertices exceed the skeleton budget of {}", budget.max_vertices)));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    if pairs.len() as u64 > budget.max_pairs {
        return Err(Error::TooLarge(format!("{} vertex pairs exceed the budget of {}", pairs.len(), budget.max_pairs)));
    }
    let edges: Vec<(usize, usize)> = pairs.into_par_iter().filter(|&(i, j)| v_adjacency(v, i, j)).collect();
    let labels = v
        .vertices()
        .iter()
        .map(|p| format!("({})", p.iter().map(format_rat).collect::<Vec<_>>().join(",")))
        .collect();
    Ok(SkeletonGraph::new(n, edges)?.with_labels(labels))
}

/// The graph read off the 1-dimensional faces of a face lattice.
pub fn skeleton_from_lattice(lattice: &FaceLattice) -> SkeletonGraph {
    let edges = lattice.faces_of_dim(1).into_iter().map(|f| {
        let vs = lattice.vertices_of(f);
        (vs[0], vs[1])
    });
    SkeletonGraph::new(lattice.vertex_count(), edges).expect("lattice edges are vertex pairs")
}
