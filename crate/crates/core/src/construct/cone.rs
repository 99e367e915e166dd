use std::collections::HashSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::polytope::{enumerate::binomial, primitive_normal, Inequality, VPolytope};
use crate::rational::{dot, Rat, RatVec};

/// A pointed polyhedral cone given by its extreme rays and by the facets
/// `⟨c, x⟩ ≥ 0` together with the equations `⟨e, x⟩ = 0` of its linear
/// hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub ambient_dim: usize,
    pub generators: Vec<RatVec>,
    pub facet_normals: Vec<RatVec>,
    pub equations: Vec<RatVec>,
}

impl Cone {
    /// Computes facets by brute force over `(dim − 1)`-subsets of the
    /// generators and drops generators that are not extreme rays.
    pub fn from_generators(ambient_dim: usize, generators: Vec<RatVec>, budget: &Budget) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!("generator of length {} in dimension {ambient_dim}", g.len())));
        }
        let mut gens: Vec<RatVec> = generators.into_iter().filter(|g| !g.iter().all(Zero::is_zero)).collect();
        gens = dedup_directions(gens);
        if gens.is_empty() || !is_pointed(&gens) {
            return Err(Error::NotPointed);
        }
        let span = linalg::row_basis(&gens, ambient_dim);
        let dim = span.len();
        let equations = linalg::null_space(&gens, ambient_dim).into_iter().map(|e| primitive(&e)).collect();

        let subsets = binomial(gens.len() as u64, dim as u64 - 1);
        if subsets > budget.max_subsets {
            return Err(Error::TooLarge(format!("{subsets} generator subsets exceed the budget of {}", budget.max_subsets)));
        }
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut facet_normals = Vec::new();
        for subset in (0..gens.len()).combinations(dim - 1) {
            let rows: Vec<RatVec> = subset.iter().map(|&i| span.iter().map(|s| dot(s, &gens[i])).collect()).collect();
            let ns = linalg::null_space(&rows, dim);
            if ns.len() != 1 {
                continue;
            }
            let mut normal = vec![Rat::zero(); ambient_dim];
            for (c, s) in ns[0].iter().zip(&span) {
                for (x, y) in normal.iter_mut().zip(s) {
                    *x += c * y;
                }
            }
            let values: Vec<Rat> = gens.iter().map(|g| dot(&normal, g)).collect();
            let pos = values.iter().any(Signed::is_positive);
            let neg = values.iter().any(Signed::is_negative);
            if pos && neg {
                continue;
            }
            if !seen.insert(values.iter().map(Zero::is_zero).collect()) {
                continue;
            }
            if neg {
                normal = normal.iter().map(|x| -x).collect();
            }
            facet_normals.push(primitive(&normal));
        }
        facet_normals.sort();

        // A generator is extreme iff the facets through it cut out a ray.
        let extreme: Vec<RatVec> = gens
            .into_iter()
            .filter(|g| {
                let tight: Vec<RatVec> = facet_normals.iter().filter(|c| dot(c, g).is_zero()).cloned().collect();
                dim == 1 || linalg::rank(&tight, ambient_dim) == dim - 1
            })
            .collect();
        Ok(Cone { ambient_dim, generators: extreme, facet_normals, equations })
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facet_normals.len()
    }

    /// Number of facets containing each extreme ray.
    pub fn ray_degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.facet_normals.iter().filter(|c| dot(c, g).is_zero()).count()).collect()
    }

    /// H-description rows `−⟨c, x⟩ ≤ 0` and the hull equations.
    pub fn inequalities(&self) -> (Vec<Inequality>, Vec<Inequality>) {
        let ineqs = self.facet_normals.iter().map(|c| Inequality::new(c.iter().map(|x| -x).collect(), Rat::zero())).collect();
        let eqs = self.equations.iter().map(|e| Inequality::new(e.clone(), Rat::zero())).collect();
        (ineqs, eqs)
    }
}

fn primitive(v: &[Rat]) -> RatVec {
    primitive_normal(&Inequality::new(v.to_vec(), Rat::zero())).normal
}

/// Removes positive multiples, keeping the first of each direction.
fn dedup_directions(gens: Vec<RatVec>) -> Vec<RatVec> {
    let mut seen = HashSet::new();
    gens.into_iter().filter(|g| seen.insert(primitive(g))).collect()
}

/// No convex combination of the generators is zero.
fn is_pointed(gens: &[RatVec]) -> bool {
    let n = gens[0].len();
    let mut lp = LinearProgram::new(gens.len());
    for coord in 0..n {
        lp.constrain(gens.iter().map(|g| g[coord].clone()).collect(), Relation::Eq, Rat::zero());
    }
    lp.constrain(vec![Rat::one(); gens.len()], Relation::Eq, Rat::one());
    matches!(lp.maximize(), LpOutcome::Infeasible)
}

/// `cone(P × {1})`.
pub fn homogenize(p: &VPolytope, budget: &Budget) -> Result<Cone> {
    if p.is_empty() {
        return Err(Error::Infeasible);
    }
    let gens = p
        .vertices()
        .iter()
        .map(|v| {
            let mut g = v.clone();
            g.push(Rat::one());
            g
        })
        .collect();
    Cone::from_generators(p.ambient_dim + 1, gens, budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeSimplicity {
    /// The cone is a simple polyhedron: as many facets as its dimension.
    Strong,
    /// Every extreme ray lies in exactly `dim − 1` facets.
    WeakOnly,
    Neither,
}

pub fn cone_simplicity(c: &Cone) -> ConeSimplicity {
    let d = c.dim();
    if c.facet_count() == d {
        ConeSimplicity::Strong
    } else if c.ray_degrees().iter().all(|&k| k + 1 == d) {
        ConeSimplicity::WeakOnly
    } else {
        ConeSimplicity::Neither
    }
}

/// The product cone compared against the product rule: weakly simple iff
/// both factors are strongly simple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductCheck {
    pub weakly_simple: bool,
    pub predicted: bool,
    /// Facet count of the recomputed product matches the sum of factors.
    pub facets_add_up: bool,
}

impl ProductCheck {
    pub fn passes(&self) -> bool {
        self.weakly_simple == self.predicted && self.facets_add_up
    }
}

/// `C₁ × C₂` assembled from the factors, plus an independent recomputation
/// of its facets from the generators alone.
pub fn product_cone(c1: &Cone, c2: &Cone, budget: &Budget) -> Result<(Cone, ProductCheck)> {
    let (n1, n2) = (c1.ambient_dim, c2.ambient_dim);
    let pad_right = |v: &RatVec| [v.clone(), vec![Rat::zero(); n2]].concat();
    let pad_left = |v: &RatVec| [vec![Rat::zero(); n1], v.clone()].concat();
    let generators: Vec<RatVec> = c1.generators.iter().map(pad_right).chain(c2.generators.iter().map(pad_left)).collect();
    let mut facet_normals: Vec<RatVec> =
        c1.facet_normals.iter().map(pad_right).chain(c2.facet_normals.iter().map(pad_left)).collect();
    facet_normals.sort();
    let equations = c1.equations.iter().map(pad_right).chain(c2.equations.iter().map(pad_left)).collect();
    let product = Cone { ambient_dim: n1 + n2, generators: generators.clone(), facet_normals, equations };

    let direct = Cone::from_generators(n1 + n2, generators, budget)?;
    let weakly_simple = cone_simplicity(&direct) != ConeSimplicity::Neither;
    let predicted = cone_simplicity(c1) == ConeSimplicity::Strong && cone_simplicity(c2) == ConeSimplicity::Strong;
    let check = ProductCheck { weakly_simple, predicted, facets_add_up: direct.facet_count() == product.facet_count() };
    Ok((product, check))
}
