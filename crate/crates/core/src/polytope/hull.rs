use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::enumerate::binomial;
use super::{HPolytope, IncidenceStructure, Inequality, VPolytope};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{dot, sub, Rat, RatVec};

/// Facet description of `conv(V)` by brute-force hyperplane search.
///
/// The returned H-polytope carries the affine hull as equations and one
/// inequality per facet; its incidence rows are in the same order. Facet
/// normals are chosen inside the linear span of `V - v_0` and scaled to
/// primitive integer vectors, so the output is canonical.
pub fn convex_hull_facets(v: &VPolytope, budget: &Budget) -> Result<(HPolytope, IncidenceStructure)> {
    let n = v.ambient_dim;
    let pts = v.vertices();
    let Some(base) = pts.first() else {
        return Err(Error::Infeasible);
    };
    let diffs: Vec<RatVec> = pts[1..].iter().map(|p| sub(p, base)).collect();
    let span = linalg::row_basis(&diffs, n);
    let dim = span.len();

    let equations: Vec<Inequality> = linalg::null_space(&diffs, n)
        .into_iter()
        .map(|c| {
            let rhs = dot(&c, base);
            primitive_normal(&Inequality::new(c, rhs))
        })
        .collect();

    let mut facets = Vec::new();
    let mut incident = Vec::new();
    if dim > 0 {
        let subsets = binomial(pts.len() as u64, dim as u64);
        if subsets > budget.max_subsets {
            return Err(Error::TooLarge(format!(
                "{subsets} vertex subsets exceed the budget of {}",
                budget.max_subsets
            )));
        }
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        for subset in (0..pts.len()).combinations(dim) {
            let anchor = &pts[subset[0]];
            // Coefficients c with normal = Σ c_l span_l orthogonal to the
            // subset's edge directions.
            let constraints: Vec<RatVec> = subset[1..]
                .iter()
                .map(|&i| {
                    let d = sub(&pts[i], anchor);
                    span.iter().map(|s| dot(s, &d)).collect()
                })
                .collect();
            let ns = linalg::null_space(&constraints, dim);
            if ns.len() != 1 {
                continue;
            }
            let mut normal = vec![Rat::zero(); n];
            for (coef, s) in ns[0].iter().zip(&span) {
                for (x, y) in normal.iter_mut().zip(s) {
                    *x += coef * y;
                }
            }
            let rhs = dot(&normal, anchor);
            let values: Vec<Rat> = pts.iter().map(|p| dot(&normal, p) - &rhs).collect();
            let any_pos = values.iter().any(Signed::is_positive);
            let any_neg = values.iter().any(Signed::is_negative);
            if any_pos && any_neg {
                continue;
            }
            let tight: Vec<bool> = values.iter().map(Zero::is_zero).collect();
            if !seen.insert(tight.clone()) {
                continue;
            }
            let row = if any_pos {
                Inequality::new(normal.iter().map(|x| -x).collect(), -rhs)
            } else {
                Inequality::new(normal, rhs)
            };
            facets.push(primitive_normal(&row));
            incident.push(tight);
        }
    }

    let sources = (0..facets.len()).collect();
    let h = HPolytope::new(n, facets, equations)?;
    let inc = IncidenceStructure { dim, vertex_count: pts.len(), incident, sources };
    Ok((h, inc))
}

/// Rescales a row by a positive factor so that normal and right-hand side
/// are coprime integers.
pub fn primitive_normal(row: &Inequality) -> Inequality {
    let all = row.normal.iter().chain(std::iter::once(&row.rhs));
    let lcm = all.clone().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = all.map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return row.clone();
    }
    let mut vals: Vec<Rat> = ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect();
    let rhs = vals.pop().unwrap();
    Inequality::new(vals, rhs)
}
