use num_traits::{One, Zero};

use super::{homogenize, Extension, Projection};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polytope::{affine_dimension, HPolytope, Inequality, VPolytope};
use crate::rational::Rat;

fn check_dims(p1: &VPolytope, p2: &VPolytope) -> Result<()> {
    if p1.ambient_dim != p2.ambient_dim {
        return Err(Error::DimensionMismatch(format!("{} vs {}", p1.ambient_dim, p2.ambient_dim)));
    }
    if p1.is_empty() || p2.is_empty() {
        return Err(Error::InvalidInput("disjunction of an empty polytope".into()));
    }
    Ok(())
}

/// `{(x¹, λ₁, x², λ₂) ∈ homog P₁ × homog P₂ : λ₁ + λ₂ = 1}` projected by
/// `x¹ + x²` onto `conv(P₁ ∪ P₂)`.
pub fn disjunctive_extension(p1: &VPolytope, p2: &VPolytope, budget: &Budget) -> Result<Extension> {
    check_dims(p1, p2)?;
    let n = p1.ambient_dim;
    let (c1, c2) = (homogenize(p1, budget)?, homogenize(p2, budget)?);
    let width = n + 1;
    let place = |row: &Inequality, first: bool| {
        let zeros = vec![Rat::zero(); width];
        let normal = if first { [row.normal.clone(), zeros].concat() } else { [zeros, row.normal.clone()].concat() };
        Inequality::new(normal, row.rhs.clone())
    };
    let (i1, e1) = c1.inequalities();
    let (i2, e2) = c2.inequalities();
    let inequalities = i1.iter().map(|r| place(r, true)).chain(i2.iter().map(|r| place(r, false))).collect();
    let mut equations: Vec<Inequality> = e1.iter().map(|r| place(r, true)).chain(e2.iter().map(|r| place(r, false))).collect();
    let mut lambdas = vec![Rat::zero(); 2 * width];
    lambdas[n] = Rat::one();
    lambdas[2 * n + 1] = Rat::one();
    equations.push(Inequality::new(lambdas, Rat::one()));

    let matrix = (0..n)
        .map(|i| (0..2 * width).map(|j| if j == i || j == width + i { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let projection = Projection { matrix, offset: vec![Rat::zero(); n] };
    Ok(Extension { q: HPolytope::new(2 * width, inequalities, equations)?, projection })
}

/// Vertex count equals affine dimension plus one.
pub fn is_simplex(p: &VPolytope) -> Result<bool> {
    Ok(p.len() == affine_dimension(p)? + 1)
}

/// The disjunctive extension is simple iff both inputs are simplices.
pub fn disjunctive_simplicity(p1: &VPolytope, p2: &VPolytope) -> Result<bool> {
    check_dims(p1, p2)?;
    Ok(is_simplex(p1)? && is_simplex(p2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{enumerate_vertices, is_simple};
    use crate::rational::rvec;

    fn vp(points: &[&[i64]]) -> VPolytope {
        VPolytope::new(points[0].len(), points.iter().map(|p| rvec(p)).collect()).unwrap()
    }

    fn check(p1: &VPolytope, p2: &VPolytope) -> bool {
        let b = Budget::default();
        let ext = disjunctive_extension(p1, p2, &b).unwrap();
        let (v, inc) = enumerate_vertices(&ext.q, &b).unwrap();
        let projected = v.vertices().iter().map(|x| ext.projection.apply(x)).collect();
        let got = VPolytope::hull_of(p1.ambient_dim, projected).unwrap();
        let mut union = p1.vertices().to_vec();
        union.extend(p2.vertices().iter().cloned());
        assert_eq!(got, VPolytope::hull_of(p1.ambient_dim, union).unwrap());
        let simple = is_simple(&inc);
        assert_eq!(simple, disjunctive_simplicity(p1, p2).unwrap());
        simple
    }

    #[test]
    fn two_points() {
        assert!(check(&vp(&[&[0]]), &vp(&[&[1]])));
    }

    #[test]
    fn triangles_and_squares() {
        let tri = vp(&[&[0, 0], &[1, 0], &[0, 1]]);
        let tri2 = vp(&[&[2, 2], &[3, 2], &[2, 3]]);
        let sq = vp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let seg = vp(&[&[3, 0], &[3, 1]]);
        assert!(check(&tri, &tri2));
        assert!(check(&tri, &seg));
        assert!(!check(&sq, &vp(&[&[5, 5]])));
        assert!(!check(&sq, &tri2));
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(matches!(disjunctive_simplicity(&vp(&[&[0]]), &vp(&[&[0, 0]])), Err(Error::DimensionMismatch(_))));
    }
}
