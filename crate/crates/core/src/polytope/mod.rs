//! Exact-rational polytope kernel for desk-scale instances.

pub(crate) mod enumerate;
mod hull;
mod lattice;
mod skeleton;

pub use enumerate::{enumerate_vertices, is_bounded, is_feasible};
pub use hull::{convex_hull_facets, primitive_normal};
pub use lattice::{face_lattice, FaceLattice};
pub use skeleton::{skeleton, skeleton_from_lattice, v_adjacency};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::{dot, Rat, RatVec};

/// `normal · x ≤ rhs`, or `normal · x = rhs` when used as an equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub normal: RatVec,
    pub rhs: Rat,
}

impl Inequality {
    pub fn new(normal: RatVec, rhs: Rat) -> Self {
        Inequality { normal, rhs }
    }

    pub fn slack(&self, x: &[Rat]) -> Rat {
        &self.rhs - dot(&self.normal, x)
    }

    pub fn is_tight(&self, x: &[Rat]) -> bool {
        self.slack(x).is_zero()
    }

    pub fn holds(&self, x: &[Rat]) -> bool {
        !self.slack(x).is_negative()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    pub ambient_dim: usize,
    pub inequalities: Vec<Inequality>,
    pub equations: Vec<Inequality>,
}

impl HPolytope {
    pub fn new(ambient_dim: usize, inequalities: Vec<Inequality>, equations: Vec<Inequality>) -> Result<Self> {
        for row in inequalities.iter().chain(&equations) {
            if row.normal.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in ambient dimension {ambient_dim}",
                    row.normal.len()
                )));
            }
        }
        Ok(HPolytope { ambient_dim, inequalities, equations })
    }

    /// The box `lo ≤ x_i ≤ hi` for every coordinate.
    pub fn cube(dim: usize, lo: Rat, hi: Rat) -> Self {
        let mut ineqs = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let mut up = vec![Rat::zero(); dim];
            up[i] = Rat::from_integer(1.into());
            let down: RatVec = up.iter().map(|x| -x).collect();
            ineqs.push(Inequality::new(down, -lo.clone()));
            ineqs.push(Inequality::new(up, hi.clone()));
        }
        HPolytope { ambient_dim: dim, inequalities: ineqs, equations: Vec::new() }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.inequalities.iter().all(|r| r.holds(x)) && self.equations.iter().all(|r| r.is_tight(x))
    }

    pub fn with_inequality(&self, row: Inequality) -> Self {
        let mut h = self.clone();
        h.inequalities.push(row);
        h
    }
}

/// A finite point set listed as the vertices of its convex hull, sorted
/// lexicographically and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VPolytope {
    pub ambient_dim: usize,
    vertices: Vec<RatVec>,
}

impl VPolytope {
    /// Canonicalizes `vertices` (sort + dedup). The caller asserts that
    /// every point is extreme; use [`VPolytope::hull_of`] otherwise.
    pub fn new(ambient_dim: usize, mut vertices: Vec<RatVec>) -> Result<Self> {
        if let Some(bad) = vertices.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} in ambient dimension {ambient_dim}",
                bad.len()
            )));
        }
        vertices.sort();
        vertices.dedup();
        Ok(VPolytope { ambient_dim, vertices })
    }

    /// Keeps only the points that are not convex combinations of the
    /// others, decided by an exact LP per point.
    pub fn hull_of(ambient_dim: usize, points: Vec<RatVec>) -> Result<Self> {
        let all = VPolytope::new(ambient_dim, points)?;
        let pts = &all.vertices;
        let extreme = (0..pts.len())
            .filter(|&i| {
                let others: Vec<&RatVec> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
                !in_convex_hull(&others, &pts[i])
            })
            .map(|i| pts[i].clone())
            .collect();
        VPolytope::new(ambient_dim, extreme)
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &[Rat]) -> Option<usize> {
        self.vertices.binary_search_by(|p| p.as_slice().cmp(v)).ok()
    }
}

/// Rank of `{v_i - v_0}`; the empty polytope has dimension -1, reported
/// as `Infeasible`.
pub fn affine_dimension(v: &VPolytope) -> Result<usize> {
    linalg::affine_rank(v.vertices()).ok_or(Error::Infeasible)
}

/// Whether `target` is a convex combination of `points`.
pub fn in_convex_hull(points: &[&RatVec], target: &[Rat]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = target.len();
    let mut lp = LinearProgram::new(points.len());
    for coord in 0..n {
        let row = points.iter().map(|p| p[coord].clone()).collect();
        lp.constrain(row, Relation::Eq, target[coord].clone());
    }
    lp.constrain(vec![Rat::from_integer(1.into()); points.len()], Relation::Eq, Rat::from_integer(1.into()));
    !matches!(lp.maximize(), LpOutcome::Infeasible)
}

/// Facet-vertex incidences of a polytope. Row `i` is the facet defined by
/// inequality `sources[i]` of the H-description it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    pub dim: usize,
    pub vertex_count: usize,
    pub incident: Vec<Vec<bool>>,
    pub sources: Vec<usize>,
}

impl IncidenceStructure {
    pub fn facet_count(&self) -> usize {
        self.incident.len()
    }

    pub fn facet_vertices(&self, facet: usize) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.incident[facet][v]).collect()
    }

    pub fn vertex_facets(&self, vertex: usize) -> Vec<usize> {
        (0..self.facet_count()).filter(|&f| self.incident[f][vertex]).collect()
    }

    pub fn vertex_degree(&self, vertex: usize) -> usize {
        self.incident.iter().filter(|row| row[vertex]).count()
    }
}

/// Every vertex lies in exactly `dim` facets.
pub fn is_simple(inc: &IncidenceStructure) -> bool {
    (0..inc.vertex_count).all(|v| inc.vertex_degree(v) == inc.dim)
}
