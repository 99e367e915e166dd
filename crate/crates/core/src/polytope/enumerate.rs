use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::{HPolytope, IncidenceStructure, VPolytope};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::{Rat, RatVec};

/// Vertex enumeration by brute force over subsets of active constraints.
///
/// Each subset of `n - rank(E)` inequalities is solved together with the
/// equations; unique solutions satisfying every inequality are vertices.
/// The returned incidence lists only true facets: inequalities whose tight
/// vertex set spans a `(d-1)`-dimensional set, deduplicated by that set.
pub fn enumerate_vertices(h: &HPolytope, budget: &Budget) -> Result<(VPolytope, IncidenceStructure)> {
    let n = h.ambient_dim;

    let mut rows = Vec::new();
    for (i, row) in h.inequalities.iter().enumerate() {
        if row.normal.iter().all(Zero::is_zero) {
            if row.rhs.is_negative() {
                return Err(Error::Infeasible);
            }
            continue;
        }
        rows.push(i);
    }

    let eq_aug: Vec<RatVec> = h
        .equations
        .iter()
        .map(|e| {
            let mut r = e.normal.clone();
            r.push(e.rhs.clone());
            r
        })
        .collect();
    let (eq_red, eq_piv) = linalg::rref(&eq_aug, n + 1);
    if eq_piv.last() == Some(&n) {
        return Err(Error::Infeasible);
    }
    let eq_normals: Vec<RatVec> = eq_red.iter().map(|r| r[..n].to_vec()).collect();
    let eq_rhs: Vec<Rat> = eq_red.iter().map(|r| r[n].clone()).collect();
    let k = n - eq_normals.len();

    let subsets = binomial(rows.len() as u64, k as u64);
    if subsets > budget.max_subsets {
        return Err(Error::TooLarge(format!(
            "{subsets} constraint subsets exceed the budget of {}",
            budget.max_subsets
        )));
    }

    let mut found: BTreeSet<RatVec> = BTreeSet::new();
    for subset in rows.iter().copied().combinations(k) {
        let mut a = eq_normals.clone();
        let mut b = eq_rhs.clone();
        for &i in &subset {
            a.push(h.inequalities[i].normal.clone());
            b.push(h.inequalities[i].rhs.clone());
        }
        if let Some(x) = linalg::solve_unique(&a, &b, n) {
            if rows.iter().all(|&i| h.inequalities[i].holds(&x)) {
                found.insert(x);
            }
        }
    }

    if found.is_empty() {
        return Err(if is_feasible(h) { Error::Unbounded } else { Error::Infeasible });
    }
    if !is_bounded(h) {
        return Err(Error::Unbounded);
    }

    let vpoly = VPolytope::new(n, found.into_iter().collect())?;
    let incidence = facet_incidence(h, &rows, &vpoly)?;
    Ok((vpoly, incidence))
}

fn facet_incidence(h: &HPolytope, rows: &[usize], v: &VPolytope) -> Result<IncidenceStructure> {
    let dim = super::affine_dimension(v)?;
    let mut incident = Vec::new();
    let mut sources = Vec::new();
    let mut seen: HashMap<Vec<bool>, usize> = HashMap::new();
    if dim > 0 {
        for &i in rows {
            let tight: Vec<bool> = v.vertices().iter().map(|x| h.inequalities[i].is_tight(x)).collect();
            if seen.contains_key(&tight) {
                continue;
            }
            let pts: Vec<RatVec> = v
                .vertices()
                .iter()
                .zip(&tight)
                .filter(|(_, &t)| t)
                .map(|(p, _)| p.clone())
                .collect();
            if linalg::affine_rank(&pts) == Some(dim - 1) {
                seen.insert(tight.clone(), i);
                incident.push(tight);
                sources.push(i);
            }
        }
    }
    Ok(IncidenceStructure { dim, vertex_count: v.len(), incident, sources })
}

pub fn is_feasible(h: &HPolytope) -> bool {
    let n = h.ambient_dim;
    let mut lp = LinearProgram::new(n);
    for v in 0..n {
        lp.set_free(v);
    }
    for row in &h.inequalities {
        lp.constrain(row.normal.clone(), Relation::Le, row.rhs.clone());
    }
    for row in &h.equations {
        lp.constrain(row.normal.clone(), Relation::Eq, row.rhs.clone());
    }
    !matches!(lp.maximize(), LpOutcome::Infeasible)
}

/// Whether the recession cone `{d : A d ≤ 0, E d = 0}` is trivial, checked
/// by maximizing `±d_i` over the cone cut by the unit box.
pub fn is_bounded(h: &HPolytope) -> bool {
    let n = h.ambient_dim;
    let mut base = LinearProgram::new(n);
    for v in 0..n {
        base.set_free(v);
        let mut unit = vec![Rat::zero(); n];
        unit[v] = Rat::one();
        base.constrain(unit.clone(), Relation::Le, Rat::one());
        base.constrain(unit, Relation::Ge, -Rat::one());
    }
    for row in &h.inequalities {
        base.constrain(row.normal.clone(), Relation::Le, Rat::zero());
    }
    for row in &h.equations {
        base.constrain(row.normal.clone(), Relation::Eq, Rat::zero());
    }
    for v in 0..n {
        for sign in [1, -1] {
            let mut c = vec![Rat::zero(); n];
            c[v] = Rat::from_integer(sign.into());
            let mut lp = base.clone();
            lp.set_objective(c);
            if let LpOutcome::Optimal { value, .. } = lp.maximize() {
                if value.is_positive() {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{is_simple, Inequality};
    use crate::rational::{rat, ratio, rvec};

    fn simplex3() -> HPolytope {
        let mut ineqs = Vec::new();
        for i in 0..3 {
            let mut a = vec![rat(0); 3];
            a[i] = rat(-1);
            ineqs.push(Inequality::new(a, rat(0)));
        }
        ineqs.push(Inequality::new(rvec(&[1, 1, 1]), rat(1)));
        HPolytope::new(3, ineqs, vec![]).unwrap()
    }

    #[test]
    fn unit_square() {
        let sq = HPolytope::cube(2, rat(0), rat(1));
        let (v, inc) = enumerate_vertices(&sq, &Budget::default()).unwrap();
        assert_eq!(v.vertices(), &[rvec(&[0, 0]), rvec(&[0, 1]), rvec(&[1, 0]), rvec(&[1, 1])]);
        assert_eq!(inc.facet_count(), 4);
        assert!((0..4).all(|j| inc.vertex_degree(j) == 2));
        assert!(is_simple(&inc));
    }

    #[test]
    fn simplex_in_r3() {
        let (v, inc) = enumerate_vertices(&simplex3(), &Budget::default()).unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(inc.dim, 3);
        assert!(is_simple(&inc));
    }

    #[test]
    fn redundant_and_duplicate_rows_are_not_facets() {
        let sq = HPolytope::cube(2, rat(0), rat(1))
            .with_inequality(Inequality::new(rvec(&[1, 1]), rat(2)))
            .with_inequality(Inequality::new(rvec(&[2, 0]), rat(2)))
            .with_inequality(Inequality::new(rvec(&[1, 1]), rat(5)));
        let (_, inc) = enumerate_vertices(&sq, &Budget::default()).unwrap();
        assert_eq!(inc.facet_count(), 4);
    }

    #[test]
    fn implicit_equalities_are_dropped() {
        // x + y <= 1 and x + y >= 1 on the unit square: a segment.
        let h = HPolytope::cube(2, rat(0), rat(1))
            .with_inequality(Inequality::new(rvec(&[1, 1]), rat(1)))
            .with_inequality(Inequality::new(rvec(&[-1, -1]), rat(-1)));
        let (v, inc) = enumerate_vertices(&h, &Budget::default()).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(inc.dim, 1);
        assert_eq!(inc.facet_count(), 2);
        assert!(is_simple(&inc));
    }

    #[test]
    fn errors() {
        let b = Budget::default();
        let half_plane = HPolytope::new(2, vec![Inequality::new(rvec(&[1, 0]), rat(1))], vec![]).unwrap();
        assert_eq!(enumerate_vertices(&half_plane, &b).unwrap_err(), Error::Unbounded);

        let wedge = HPolytope::new(
            2,
            vec![Inequality::new(rvec(&[-1, 0]), rat(0)), Inequality::new(rvec(&[0, -1]), rat(0))],
            vec![],
        )
        .unwrap();
        assert_eq!(enumerate_vertices(&wedge, &b).unwrap_err(), Error::Unbounded);

        let empty = HPolytope::cube(1, rat(0), rat(1)).with_inequality(Inequality::new(rvec(&[1]), rat(-1)));
        assert_eq!(enumerate_vertices(&empty, &b).unwrap_err(), Error::Infeasible);

        let bad_eq = HPolytope::new(1, vec![], vec![Inequality::new(rvec(&[0]), rat(1))]).unwrap();
        assert_eq!(enumerate_vertices(&bad_eq, &b).unwrap_err(), Error::Infeasible);

        let tiny = Budget { max_subsets: 3, ..Budget::default() };
        assert!(matches!(enumerate_vertices(&simplex3(), &tiny), Err(Error::TooLarge(_))));
    }

    #[test]
    fn equations_fix_a_point() {
        let h = HPolytope::new(
            2,
            vec![],
            vec![Inequality::new(rvec(&[1, 0]), ratio(1, 2)), Inequality::new(rvec(&[0, 1]), rat(3))],
        )
        .unwrap();
        let (v, inc) = enumerate_vertices(&h, &Budget::default()).unwrap();
        assert_eq!(v.vertices(), &[vec![ratio(1, 2), rat(3)]]);
        assert_eq!(inc.dim, 0);
        assert!(is_simple(&inc));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 0), 1);
    }
}
