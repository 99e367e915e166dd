//! Enumeration budgets shared by the brute-force routines.

use std::env;

/// Environment variable that scales every default budget.
///
/// A plain integer sets `max_subsets`, `max_vertices` and `max_pairs` to
/// that value; `key=value` pairs separated by commas set individual fields.
pub const BUDGET_ENV: &str = "SIMPLEXT_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Constraint subsets examined by brute-force vertex enumeration.
    pub max_subsets: u64,
    /// Vertices of a skeleton built from pairwise adjacency tests.
    pub max_vertices: usize,
    /// Vertices of a polytope whose face lattice is materialized.
    pub max_lattice_vertices: usize,
    /// Faces in a materialized face lattice.
    pub max_lattice_faces: usize,
    /// Node pairs examined by an all-pairs closure sweep.
    pub max_pairs: u64,
    /// Graph size for the exact minimum closed-set cover.
    pub max_exact_nodes: usize,
    /// Closed sets visited during the exact cover search.
    pub max_closed_sets: usize,
    /// Combinatorial vertices listed by a family enumerator.
    pub max_family_vertices: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subsets: 2_000_000,
            max_vertices: 2_000,
            max_lattice_vertices: 60,
            max_lattice_faces: 200_000,
            max_pairs: 2_000_000,
            max_exact_nodes: 30,
            max_closed_sets: 500_000,
            max_family_vertices: 20_000,
        }
    }
}

impl Budget {
    pub fn from_env() -> Self {
        match env::var(BUDGET_ENV) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Self::default(),
        }
    }

    /// Applies an override string in the `SIMPLEXT_BUDGET` syntax. Unknown
    /// keys and unparsable values are ignored.
    pub fn with_overrides(mut self, spec: &str) -> Self {
        let spec = spec.trim();
        if let Ok(n) = spec.parse::<u64>() {
            self.max_subsets = n;
            self.max_vertices = n as usize;
            self.max_pairs = n;
            return self;
        }
        for part in spec.split(',') {
            let Some((key, value)) = part.split_once('=') else {
                continue;
            };
            let Ok(v) = value.trim().parse::<u64>() else {
                continue;
            };
            match key.trim() {
                "subsets" => self.max_subsets = v,
                "vertices" => self.max_vertices = v as usize,
                "lattice_vertices" => self.max_lattice_vertices = v as usize,
                "lattice_faces" => self.max_lattice_faces = v as usize,
                "pairs" => self.max_pairs = v,
                "exact_nodes" => self.max_exact_nodes = v as usize,
                "closed_sets" => self.max_closed_sets = v as usize,
                "family_vertices" => self.max_family_vertices = v,
                _ => {}
            }
        }
        self
    }
}
