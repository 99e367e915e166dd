use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polytope::{skeleton, VPolytope};
use crate::rational::rat;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleConfig {
    pub dim: usize,
    pub count: usize,
    /// Points drawn per sample.
    pub vertices: usize,
    /// Exponent of the size heuristic `vertices <= 2^(sigma * dim)`.
    pub sigma: f64,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(dim: usize, count: usize, vertices: usize) -> Self {
        SampleConfig { dim, count, vertices, sigma: 0.3, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub config: SampleConfig,
    /// `2^(sigma * dim)`; exceeding it is allowed but flagged.
    pub heuristic_cap: f64,
    pub within_heuristic: bool,
    pub complete: usize,
    pub fraction_complete: f64,
    /// Per sample: the drawn points as bit strings and whether every pair is
    /// an edge. A complete skeleton forces every simple extension to have
    /// at least as many facets as vertices.
    pub samples: Vec<(Vec<String>, bool)>,
}

/// Whether every pair of the given 0/1 points spans an edge of their hull.
/// Every 0/1 point is a vertex of the hull of any set containing it.
pub fn is_complete_01(dim: usize, points: &[Vec<u8>]) -> Result<bool> {
    if points.iter().any(|p| p.len() != dim || p.iter().any(|&b| b > 1)) {
        return Err(Error::InvalidInput(format!("points must be 0/1 vectors of length {dim}")));
    }
    let v = VPolytope::new(dim, points.iter().map(|p| p.iter().map(|&b| rat(b as i64)).collect()).collect())?;
    Ok(skeleton(&v, &Budget::default())?.is_complete())
}

/// Draws `count` uniform `vertices`-subsets of `{0,1}^dim` from a seeded
/// stream and reports how many have a complete skeleton.
pub fn sample_random_01(config: SampleConfig) -> Result<SampleReport> {
    let SampleConfig { dim, count, vertices, sigma, seed } = config;
    if !(1..=8).contains(&dim) {
        return Err(Error::OutOfRange(format!("dimension must be 1..=8, got {dim}")));
    }
    let cube = 1usize << dim;
    if vertices == 0 || vertices > cube {
        return Err(Error::OutOfRange(format!("cannot draw {vertices} of {cube} cube vertices")));
    }
    let heuristic_cap = 2f64.powf(sigma * dim as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let mut picked = index::sample(&mut rng, cube, vertices).into_vec();
        picked.sort_unstable();
        let points: Vec<Vec<u8>> =
            picked.iter().map(|&code| (0..dim).map(|bit| (code >> (dim - 1 - bit) & 1) as u8).collect()).collect();
        let complete = is_complete_01(dim, &points)?;
        let labels = points.iter().map(|p| p.iter().map(|b| char::from(b'0' + b)).collect()).collect();
        samples.push((labels, complete));
    }
    let complete = samples.iter().filter(|s| s.1).count();
    Ok(SampleReport {
        config,
        heuristic_cap,
        within_heuristic: vertices as f64 <= heuristic_cap,
        complete,
        fraction_complete: if count == 0 { 0.0 } else { complete as f64 / count as f64 },
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_is_not_complete() {
        assert!(!is_complete_01(2, &[vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap());
    }

    #[test]
    fn independent_points_are_complete() {
        assert!(is_complete_01(3, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap());
        let report = sample_random_01(SampleConfig::new(3, 20, 4)).unwrap();
        for (points, complete) in &report.samples {
            assert_eq!(points.len(), 4);
            if *complete {
                assert!(report.complete > 0);
            }
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = sample_random_01(SampleConfig::new(5, 10, 6)).unwrap();
        let b = sample_random_01(SampleConfig::new(5, 10, 6)).unwrap();
        assert_eq!(a, b);
        let c = sample_random_01(SampleConfig { seed: 7, ..SampleConfig::new(5, 10, 6) }).unwrap();
        assert_ne!(a.samples, c.samples);
    }
}
