use num_traits::Zero;
use serde::Serialize;

use super::{Extension, Halfspace, Projection};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg;
use crate::polytope::{enumerate_vertices, is_bounded, is_feasible, is_simple, HPolytope, Inequality};
use crate::rational::{dot, Rat};

/// Extension of `conv(P₁ ∪ P₂)` where `P₁ = P ∩ H_≤` and `P₂` is its mirror
/// image at `H_=`. Variables are `(x, y)`; `y` ranges over `P`, `x` is `y`
/// moved along the normal by at most twice its distance to `H_=`.
pub fn reflection_extension(p: &HPolytope, h: &Halfspace) -> Result<Extension> {
    let n = p.ambient_dim;
    if h.normal.len() != n {
        return Err(Error::DimensionMismatch(format!("halfspace in dimension {} for a polytope in {n}", h.normal.len())));
    }
    if !is_feasible(&p.with_inequality(h.as_inequality())) {
        return Err(Error::EmptyIntersection);
    }
    if !is_bounded(p) {
        return Err(Error::Unbounded);
    }
    let zeros = || vec![Rat::zero(); n];
    let lift_y = |row: &Inequality| {
        let mut normal = zeros();
        normal.extend(row.normal.iter().cloned());
        Inequality::new(normal, row.rhs.clone())
    };
    let mut inequalities: Vec<Inequality> = p.inequalities.iter().map(lift_y).collect();
    let equations_y = p.equations.iter().map(lift_y);
    let neg_a: Vec<Rat> = h.normal.iter().map(|x| -x).collect();
    // ⟨a,y⟩ − ⟨a,x⟩ ≤ 0
    inequalities.push(Inequality::new([neg_a.clone(), h.normal.clone()].concat(), Rat::zero()));
    // ⟨a,x⟩ + ⟨a,y⟩ ≤ 2β
    inequalities.push(Inequality::new([h.normal.clone(), h.normal.clone()].concat(), &h.rhs + &h.rhs));
    // x − y ∈ lin(a): orthogonal to a basis of a's complement.
    let mut equations: Vec<Inequality> = linalg::null_space(std::slice::from_ref(&h.normal), n)
        .into_iter()
        .map(|c| {
            let neg: Vec<Rat> = c.iter().map(|x| -x).collect();
            Inequality::new([c, neg].concat(), Rat::zero())
        })
        .collect();
    equations.extend(equations_y);
    Ok(Extension { q: HPolytope::new(2 * n, inequalities, equations)?, projection: Projection::coordinate(2 * n, n) })
}

/// How `F = P₁ ∩ H_=` sits in `P₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceCase {
    Empty,
    WholeP1,
    Facet,
    /// A nonempty face of codimension at least two.
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionSimplicity {
    pub simple: bool,
    pub p1_simple: bool,
    pub face: FaceCase,
    pub p1_dim: usize,
    /// `is_simple` of the enumerated extension, when requested.
    pub enumerated: Option<bool>,
}

/// Predicts simplicity of the reflection extension from `P₁` alone: `P₁`
/// simple and `F` empty, a facet of `P₁`, or all of `P₁`. With
/// `cross_check` the extension is also enumerated.
pub fn reflection_simplicity(p: &HPolytope, h: &Halfspace, cross_check: bool, budget: &Budget) -> Result<ReflectionSimplicity> {
    let ext = reflection_extension(p, h)?;
    let (p1, inc) = enumerate_vertices(&p.with_inequality(h.as_inequality()), budget)?;
    let tight: Vec<_> = p1.vertices().iter().filter(|v| dot(&h.normal, v) == h.rhs).cloned().collect();
    let p1_dim = inc.dim;
    let face = if tight.is_empty() {
        FaceCase::Empty
    } else if tight.len() == p1.len() {
        FaceCase::WholeP1
    } else if linalg::affine_rank(&tight) == Some(p1_dim - 1) {
        FaceCase::Facet
    } else {
        FaceCase::Lower
    };
    let p1_simple = is_simple(&inc);
    let enumerated = if cross_check {
        let (_, q_inc) = enumerate_vertices(&ext.q, budget)?;
        Some(is_simple(&q_inc))
    } else {
        None
    };
    Ok(ReflectionSimplicity { simple: p1_simple && face != FaceCase::Lower, p1_simple, face, p1_dim, enumerated })
}
