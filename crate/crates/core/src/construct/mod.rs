//! Extension constructions and their simplicity characterizations:
//! reflections, iterated reflections for regular `2^k`-gons, homogenized
//! cones and their products, and the two-polytope disjunctive program.

mod cone;
mod disjunctive;
mod gon;
mod reflection;

pub use cone::{cone_simplicity, homogenize, product_cone, Cone, ConeSimplicity, ProductCheck};
pub use disjunctive::{disjunctive_extension, disjunctive_simplicity, is_simplex};
pub use gon::{build_gon_extension, GonExtension, GonReport};
pub use reflection::{reflection_extension, reflection_simplicity, FaceCase, ReflectionSimplicity};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polytope::{HPolytope, Inequality};
use crate::rational::{dot, Rat, RatVec};

/// `⟨normal, x⟩ ≤ rhs` with a nonzero normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: RatVec,
    pub rhs: Rat,
}

impl Halfspace {
    pub fn new(normal: RatVec, rhs: Rat) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("halfspace normal must be nonzero".into()));
        }
        Ok(Halfspace { normal, rhs })
    }

    pub fn as_inequality(&self) -> Inequality {
        Inequality::new(self.normal.clone(), self.rhs.clone())
    }
}

/// Affine map `x ↦ matrix · x + offset` from the extension space onto the
/// target space. `matrix` is stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub matrix: Vec<RatVec>,
    pub offset: RatVec,
}

impl Projection {
    /// Keeps the first `target` of `source` coordinates.
    pub fn coordinate(source: usize, target: usize) -> Self {
        let matrix = (0..target)
            .map(|i| (0..source).map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() }).collect())
            .collect();
        Projection { matrix, offset: vec![Rat::zero(); target] }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, x: &[Rat]) -> RatVec {
        self.matrix.iter().zip(&self.offset).map(|(row, o)| dot(row, x) + o).collect()
    }
}

/// An extension polytope together with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub q: HPolytope,
    pub projection: Projection,
}
