use std::f64::consts::PI;

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};
use num_rational::BigRational;
use serde::Serialize;

use super::{Extension, Projection};
use crate::error::{Error, Result};
use crate::polytope::{HPolytope, Inequality};

/// Slacks at most this (relative) are tight.
const TIGHT: f64 = 1e-9;
/// Slacks between the two thresholds are neither clearly tight nor clearly
/// slack; enumeration gives up rather than guess.
const CLEAR: f64 = 1e-6;
const MATCH: f64 = 1e-7;

/// A row `normal · z ≤ rhs` in floating point.
type Row = (Vec<f64>, f64);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GonReport {
    pub k: u32,
    pub inequality_count: usize,
    pub facet_count: usize,
    pub vertex_count: usize,
    pub simple: bool,
    pub projected_vertices: Vec<[f64; 2]>,
    /// Largest distance from a regular polygon vertex to its match.
    pub max_vertex_error: f64,
    pub vertices_match: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GonExtension {
    /// Exact binary expansions of the float coefficients.
    pub extension: Extension,
    pub report: GonReport,
}

/// Mirror normals `(−sin θ_i, cos θ_i)`, `θ_i = (2^i − 1)π / 2^k`, for
/// `i = 1..=k`. Step `i` maps the `2^(i−1)` polygon vertices built so far
/// onto the next `2^(i−1)` in counter-clockwise order.
fn mirror_normals(k: u32) -> Vec<[f64; 2]> {
    let m = f64::from(1u32 << k);
    (1..=k)
        .map(|i| {
            let theta = f64::from((1u32 << i) - 1) * PI / m;
            [-theta.sin(), theta.cos()]
        })
        .collect()
}

/// Iterated reflection extension of the regular `2^k`-gon with vertex
/// `(1, 0)`. Coordinates are `(x₀, y₀, t₁, …, t_k)`; `(x₀, y₀)` is pinned to
/// `(1, 0)` and the current point after step `i` is
/// `(x₀, y₀) + Σ_{j≤i} t_j a_j`. Each step adds `t_i ≥ 0` and
/// `2⟨a_i, p_{i−1}⟩ + t_i ≤ 0`, so there are `2k` inequalities.
pub fn build_gon_extension(k: u32) -> Result<GonExtension> {
    if !(2..=6).contains(&k) {
        return Err(Error::OutOfRange(format!("polygon construction supports 2 <= k <= 6, got {k}")));
    }
    let ku = k as usize;
    let dim = ku + 2;
    let normals = mirror_normals(k);
    let mut rows: Vec<Row> = Vec::with_capacity(2 * ku);
    for (i, a) in normals.iter().enumerate() {
        let mut lower = vec![0.0; dim];
        lower[2 + i] = -1.0;
        rows.push((lower, 0.0));
        let mut upper = vec![0.0; dim];
        upper[0] = 2.0 * a[0];
        upper[1] = 2.0 * a[1];
        for (j, b) in normals[..i].iter().enumerate() {
            upper[2 + j] = 2.0 * (a[0] * b[0] + a[1] * b[1]);
        }
        upper[2 + i] = 1.0;
        rows.push((upper, 0.0));
    }
    let equations: Vec<Row> = vec![(unit(dim, 0), 1.0), (unit(dim, 1), 0.0)];
    let proj: [Vec<f64>; 2] = [
        [vec![1.0, 0.0], normals.iter().map(|a| a[0]).collect()].concat(),
        [vec![0.0, 1.0], normals.iter().map(|a| a[1]).collect()].concat(),
    ];

    let vertices = enumerate_float(dim, &rows, &equations)?;
    let tight: Vec<Vec<bool>> = vertices.iter().map(|v| rows.iter().map(|r| classify(r, v) == Some(true)).collect()).collect();
    let simple = tight.iter().all(|t| t.iter().filter(|&&b| b).count() == ku);
    let facet_count = count_facets(&vertices, &tight, ku);

    let projected: Vec<[f64; 2]> =
        vertices.iter().map(|v| [dotf(&proj[0], v), dotf(&proj[1], v)]).collect();
    let m = 1usize << k;
    let mut max_err: f64 = 0.0;
    let mut used = vec![false; projected.len()];
    let mut all_found = true;
    for j in 0..m {
        let phi = 2.0 * PI * j as f64 / m as f64;
        let target = [phi.cos(), phi.sin()];
        let best = projected
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, p)| (i, ((p[0] - target[0]).powi(2) + (p[1] - target[1]).powi(2)).sqrt()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((i, d)) if d <= MATCH => {
                used[i] = true;
                max_err = max_err.max(d);
            }
            Some((_, d)) => {
                all_found = false;
                max_err = max_err.max(d);
            }
            None => all_found = false,
        }
    }
    let vertices_match = all_found && projected.len() == m;

    let to_rat = |x: f64| BigRational::from_float(x).expect("finite coefficient");
    let exact_row = |(n, r): &Row| Inequality::new(n.iter().map(|&x| to_rat(x)).collect(), to_rat(*r));
    let q = HPolytope::new(dim, rows.iter().map(exact_row).collect(), equations.iter().map(exact_row).collect())?;
    let projection = Projection {
        matrix: proj.iter().map(|r| r.iter().map(|&x| to_rat(x)).collect()).collect(),
        offset: vec![to_rat(0.0), to_rat(0.0)],
    };
    let report = GonReport {
        k,
        inequality_count: rows.len(),
        facet_count,
        vertex_count: vertices.len(),
        simple,
        projected_vertices: projected,
        max_vertex_error: max_err,
        vertices_match,
    };
    Ok(GonExtension { extension: Extension { q, projection }, report })
}

fn unit(dim: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; dim];
    v[i] = 1.0;
    v
}

fn dotf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Some(true)` tight, `Some(false)` satisfied with clear slack, `None`
/// ambiguous or violated.
fn classify((normal, rhs): &Row, x: &[f64]) -> Option<bool> {
    let scale = 1.0 + rhs.abs() + normal.iter().zip(x).map(|(a, b)| (a * b).abs()).sum::<f64>();
    let slack = (rhs - dotf(normal, x)) / scale;
    if slack.abs() <= TIGHT {
        Some(true)
    } else if slack >= CLEAR {
        Some(false)
    } else {
        None
    }
}

fn enumerate_float(dim: usize, rows: &[Row], equations: &[Row]) -> Result<Vec<Vec<f64>>> {
    let free = dim - equations.len();
    let mut out: Vec<Vec<f64>> = Vec::new();
    for subset in (0..rows.len()).combinations(free) {
        let system: Vec<&Row> = equations.iter().chain(subset.iter().map(|&i| &rows[i])).collect();
        let a = DMatrix::from_fn(dim, dim, |r, c| system[r].0[c]);
        let b = DVector::from_fn(dim, |r, _| system[r].1);
        let lu = a.clone().lu();
        if lu.determinant().abs() < 1e-12 {
            continue;
        }
        let Some(x) = lu.solve(&b) else { continue };
        let x: Vec<f64> = x.iter().copied().collect();
        let mut feasible = true;
        for r in rows {
            let scale = 1.0 + r.1.abs() + r.0.iter().zip(&x).map(|(a, b)| (a * b).abs()).sum::<f64>();
            let slack = (r.1 - dotf(&r.0, &x)) / scale;
            if slack < -CLEAR {
                feasible = false;
                break;
            }
            if slack.abs() > TIGHT && slack.abs() < CLEAR {
                return Err(Error::ToleranceFailure(format!("slack {slack:e} at a candidate vertex")));
            }
            if slack < 0.0 && slack.abs() > TIGHT {
                feasible = false;
                break;
            }
        }
        if feasible && !out.iter().any(|v| v.iter().zip(&x).all(|(p, q)| (p - q).abs() <= MATCH)) {
            out.push(x);
        }
    }
    if out.is_empty() {
        return Err(Error::Infeasible);
    }
    Ok(out)
}

/// Inequalities whose tight vertices span a `(dim − 1)`-dimensional set,
/// counted once per distinct tight set.
fn count_facets(vertices: &[Vec<f64>], tight: &[Vec<bool>], dim: usize) -> usize {
    let rows = tight.first().map_or(0, Vec::len);
    let mut seen: Vec<Vec<bool>> = Vec::new();
    for r in 0..rows {
        let set: Vec<bool> = tight.iter().map(|t| t[r]).collect();
        if seen.contains(&set) {
            continue;
        }
        let pts: Vec<&Vec<f64>> = vertices.iter().zip(&set).filter(|(_, &s)| s).map(|(v, _)| v).collect();
        if pts.is_empty() {
            continue;
        }
        let n = pts[0].len();
        let diffs = DMatrix::from_fn(pts.len() - 1, n, |i, j| pts[i + 1][j] - pts[0][j]);
        let rank = if pts.len() == 1 { 0 } else { diffs.rank(1e-7) };
        if rank + 1 == dim {
            seen.push(set);
        }
    }
    seen.len()
}
