use std::collections::{BTreeSet, HashMap};

use super::IncidenceStructure;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Vertex sets are stored as bit masks, which caps lattices at 128 vertices.
const MASK_BITS: usize = 128;

/// The face lattice of a polytope, faces identified by their vertex sets.
///
/// Faces are ordered by (cardinality, mask), so `∅` comes first and the
/// whole polytope last.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    vertex_count: usize,
    masks: Vec<u128>,
    dims: Vec<i64>,
    /// Facet rows (of the incidence) containing each face.
    facet_sets: Vec<Vec<usize>>,
    /// Hasse diagram: faces covering each face.
    covers: Vec<Vec<usize>>,
    index: HashMap<u128, usize>,
    facet_faces: Vec<usize>,
}

pub fn face_lattice(inc: &IncidenceStructure, budget: &Budget) -> Result<FaceLattice> {
    let nv = inc.vertex_count;
    if nv > budget.max_lattice_vertices.min(MASK_BITS) {
        return Err(Error::TooLarge(format!("{nv} vertices exceed the face-lattice budget")));
    }
    let full: u128 = if nv == MASK_BITS { u128::MAX } else { (1u128 << nv) - 1 };
    let facet_masks: Vec<u128> = inc.incident.iter().map(|row| to_mask(row)).collect();

    let mut found: BTreeSet<u128> = BTreeSet::new();
    found.insert(full);
    found.insert(0);
    let mut queue: Vec<u128> = Vec::new();
    for &m in &facet_masks {
        if found.insert(m) {
            queue.push(m);
        }
    }
    while let Some(face) = queue.pop() {
        for &f in &facet_masks {
            let meet = face & f;
            if found.insert(meet) {
                if found.len() > budget.max_lattice_faces {
                    return Err(Error::TooLarge(format!(
                        "face lattice exceeds {} faces",
                        budget.max_lattice_faces
                    )));
                }
                queue.push(meet);
            }
        }
    }

    let mut masks: Vec<u128> = found.into_iter().collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let index: HashMap<u128, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    let facet_sets: Vec<Vec<usize>> = masks
        .iter()
        .map(|&m| {
            facet_masks
                .iter()
                .enumerate()
                .filter(|&(_, &f)| m & f == m)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    // Longest chain from the empty face; polytope lattices are graded so
    // this is the face dimension (the empty face sits at -1).
    let nf = masks.len();
    let mut dims = vec![-1i64; nf];
    for i in 1..nf {
        let mut best = -1;
        for j in 0..i {
            if masks[j] != masks[i] && is_subset(masks[j], masks[i]) {
                best = best.max(dims[j] + 1);
            }
        }
        dims[i] = best;
    }
    let mut covers = vec![Vec::new(); nf];
    for i in 0..nf {
        for j in (i + 1)..nf {
            if dims[j] == dims[i] + 1 && is_subset(masks[i], masks[j]) {
                covers[i].push(j);
            }
        }
    }

    let facet_faces = facet_masks.iter().map(|m| index[m]).collect();
    Ok(FaceLattice { vertex_count: nv, masks, dims, facet_sets, covers, index, facet_faces })
}

fn to_mask(row: &[bool]) -> u128 {
    row.iter().enumerate().filter(|(_, &b)| b).fold(0, |acc, (i, _)| acc | (1u128 << i))
}

fn is_subset(a: u128, b: u128) -> bool {
    a & b == a
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn empty_face(&self) -> usize {
        0
    }

    pub fn full_face(&self) -> usize {
        self.masks.len() - 1
    }

    pub fn dim(&self, face: usize) -> i64 {
        self.dims[face]
    }

    pub fn polytope_dim(&self) -> i64 {
        self.dims[self.full_face()]
    }

    pub fn vertices_of(&self, face: usize) -> Vec<usize> {
        let m = self.masks[face];
        (0..self.vertex_count).filter(|&v| m >> v & 1 == 1).collect()
    }

    pub fn contains_vertex(&self, face: usize, v: usize) -> bool {
        self.masks[face] >> v & 1 == 1
    }

    pub fn mask(&self, face: usize) -> u128 {
        self.masks[face]
    }

    /// Face whose vertex set is exactly `vertices`, if any.
    pub fn find(&self, vertices: &[usize]) -> Option<usize> {
        let m = vertices.iter().fold(0u128, |acc, &v| acc | (1u128 << v));
        self.find_mask(m)
    }

    pub fn find_mask(&self, mask: u128) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    /// `a ⊆ b` as vertex sets.
    pub fn is_subface(&self, a: usize, b: usize) -> bool {
        is_subset(self.masks[a], self.masks[b])
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&(self.masks[a] & self.masks[b])]
    }

    pub fn covers(&self, face: usize) -> &[usize] {
        &self.covers[face]
    }

    /// Incidence rows (facets) containing the face.
    pub fn defining_facets(&self, face: usize) -> &[usize] {
        &self.facet_sets[face]
    }

    /// Face ids of the facets, in incidence-row order.
    pub fn facets(&self) -> &[usize] {
        &self.facet_faces
    }

    pub fn is_facet(&self, face: usize) -> bool {
        self.dims[face] == self.polytope_dim() - 1
    }

    pub fn faces_of_dim(&self, d: i64) -> Vec<usize> {
        (0..self.len()).filter(|&f| self.dims[f] == d).collect()
    }

    /// All faces contained in `face`, including itself and `∅`.
    pub fn subfaces(&self, face: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.is_subface(g, face)).collect()
    }

    /// Smallest face containing all the given vertices.
    pub fn join_of_vertices(&self, vertices: &[usize]) -> usize {
        let m = vertices.iter().fold(0u128, |acc, &v| acc | (1u128 << v));
        (0..self.len())
            .find(|&f| is_subset(m, self.masks[f]))
            .expect("the full face contains every vertex")
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.polytope_dim().max(0) as usize;
        let mut f = vec![0; d + 1];
        for &dim in &self.dims {
            if dim >= 0 && (dim as usize) <= d {
                f[dim as usize] += 1;
            }
        }
        f
    }
}
