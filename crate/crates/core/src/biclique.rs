//! Face and vertex sets induced by the facets of an extension, the biclique
//! covering of the face-vertex non-incidence graph, and the necessary
//! conditions a simple extension imposes on them.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::closure::is_closed;
use crate::construct::{Extension, Projection};
use crate::error::{Error, Result};
use crate::graph::SkeletonGraph;
use crate::polytope::{
    convex_hull_facets, enumerate_vertices, face_lattice, is_simple, skeleton_from_lattice, FaceLattice, HPolytope,
    IncidenceStructure, Inequality, VPolytope,
};
use crate::rational::Rat;

/// A claimed extension `P = π(Q)` with both sides enumerated.
#[derive(Debug, Clone)]
pub struct ExtensionWitness {
    pub p: VPolytope,
    pub p_facets: HPolytope,
    pub lattice: FaceLattice,
    pub q: HPolytope,
    pub q_vertices: VPolytope,
    pub q_incidence: IncidenceStructure,
    pub projection: Projection,
    /// Per vertex of `Q`: which facet rows of `P` are tight at its image.
    image_facets: Vec<Vec<bool>>,
}

impl ExtensionWitness {
    /// Enumerates `Q` and checks that its vertices project into `P` and
    /// cover every vertex of `P`.
    pub fn new(p: VPolytope, q: HPolytope, projection: Projection, budget: &Budget) -> Result<Self> {
        if projection.source_dim() != q.ambient_dim || projection.target_dim() != p.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "projection maps R^{} to R^{}, but Q lives in R^{} and P in R^{}",
                projection.source_dim(),
                projection.target_dim(),
                q.ambient_dim,
                p.ambient_dim
            )));
        }
        let (p_facets, p_inc) = convex_hull_facets(&p, budget)?;
        let lattice = face_lattice(&p_inc, budget)?;
        let (q_vertices, q_incidence) = enumerate_vertices(&q, budget)?;
        let images: Vec<Vec<Rat>> = q_vertices.vertices().iter().map(|y| projection.apply(y)).collect();
        if let Some(bad) = images.iter().find(|x| !p_facets.contains(x)) {
            return Err(Error::InconsistentWitness(format!("a vertex of Q projects to {bad:?}, outside P")));
        }
        if let Some(v) = p.vertices().iter().find(|v| !images.contains(v)) {
            return Err(Error::InconsistentWitness(format!("vertex {v:?} of P has no preimage vertex in Q")));
        }
        let image_facets =
            images.iter().map(|x| p_facets.inequalities.iter().map(|row| row.is_tight(x)).collect()).collect();
        Ok(ExtensionWitness { p, p_facets, lattice, q, q_vertices, q_incidence, projection, image_facets })
    }

    pub fn from_extension(p: VPolytope, ext: Extension, budget: &Budget) -> Result<Self> {
        Self::new(p, ext.q, ext.projection, budget)
    }

    pub fn facet_count(&self) -> usize {
        self.q_incidence.facet_count()
    }

    /// Whether vertex `y` of `Q` projects into face `face` of `P`.
    fn image_in(&self, y: usize, face: usize) -> bool {
        if face == self.lattice.empty_face() {
            return false;
        }
        self.lattice.defining_facets(face).iter().all(|&f| self.image_facets[y][f])
    }

    /// Vertices of `Q` in the preimage face `j(F)`.
    pub fn preimage(&self, face: usize) -> Vec<usize> {
        (0..self.q_vertices.len()).filter(|&y| self.image_in(y, face)).collect()
    }
}

/// `P` as a face of the simplex over its vertices: `x = Σ λ_v v`,
/// `Σ λ_v = 1`, `λ ≥ 0`. Coordinates are `(x, λ)`.
pub fn trivial_extension(p: &VPolytope) -> Result<Extension> {
    let (n, nv) = (p.ambient_dim, p.len());
    let width = n + nv;
    let mut equations = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![Rat::zero(); width];
        row[i] = Rat::one();
        for (v, vert) in p.vertices().iter().enumerate() {
            row[n + v] = -vert[i].clone();
        }
        equations.push(Inequality::new(row, Rat::zero()));
    }
    let mut sum = vec![Rat::zero(); width];
    for x in &mut sum[n..] {
        *x = Rat::one();
    }
    equations.push(Inequality::new(sum, Rat::one()));
    let inequalities = (0..nv)
        .map(|v| {
            let mut row = vec![Rat::zero(); width];
            row[n + v] = -Rat::one();
            Inequality::new(row, Rat::zero())
        })
        .collect();
    Ok(Extension { q: HPolytope::new(width, inequalities, equations)?, projection: Projection::coordinate(width, n) })
}

/// `P` as its own extension, from its facet description.
pub fn identity_extension(p: &VPolytope, budget: &Budget) -> Result<Extension> {
    let (h, _) = convex_hull_facets(p, budget)?;
    Ok(Extension { q: h, projection: Projection::coordinate(p.ambient_dim, p.ambient_dim) })
}

/// Face set `𝒢` and vertex set `𝒱` of a facet of `Q`, or a hand-built pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedBiclique {
    /// Facet row of `Q`; `None` for sets not induced by a facet.
    pub facet: Option<usize>,
    /// Face ids, ascending.
    pub faces: Vec<usize>,
    /// Vertex ids, ascending.
    pub vertices: Vec<usize>,
    pub proper: bool,
}

impl InducedBiclique {
    /// Subface closure of `generators` with the complementary vertex set.
    pub fn from_generators(lattice: &FaceLattice, generators: &[usize]) -> Self {
        let mut faces: Vec<usize> = (0..lattice.len())
            .filter(|&g| g == lattice.empty_face() || generators.iter().any(|&f| lattice.is_subface(g, f)))
            .collect();
        faces.dedup();
        let vertices = uncovered_vertices(lattice, &faces);
        let proper = vertices.len() < lattice.vertex_count();
        InducedBiclique { facet: None, faces, vertices, proper }
    }
}

fn uncovered_vertices(lattice: &FaceLattice, faces: &[usize]) -> Vec<usize> {
    let covered = faces.iter().fold(0u128, |acc, &f| acc | lattice.mask(f));
    (0..lattice.vertex_count()).filter(|&v| covered >> v & 1 == 0).collect()
}

/// `𝒢 = {F : j(F) ⊆ f̂}` and `𝒱 = {v : j(v) ⊄ f̂}`, decided on the vertices
/// of `Q` in each preimage.
pub fn induced_sets(w: &ExtensionWitness, facet: usize) -> Result<InducedBiclique> {
    if facet >= w.facet_count() {
        return Err(Error::InvalidInput(format!("facet {facet} out of range")));
    }
    let on_facet = &w.q_incidence.incident[facet];
    let lattice = &w.lattice;
    let faces: Vec<usize> =
        (0..lattice.len()).filter(|&f| (0..w.q_vertices.len()).all(|y| !w.image_in(y, f) || on_facet[y])).collect();
    let vertices: Vec<usize> = (0..lattice.vertex_count())
        .filter(|&v| {
            let face = lattice.find(&[v]).expect("vertices are faces");
            (0..w.q_vertices.len()).any(|y| w.image_in(y, face) && !on_facet[y])
        })
        .collect();
    let proper = vertices.len() < lattice.vertex_count();
    Ok(InducedBiclique { facet: Some(facet), faces, vertices, proper })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub bicliques: Vec<InducedBiclique>,
    /// Facet left out of the covering, if any.
    pub excluded: Option<usize>,
    pub non_incident_pairs: usize,
    /// `(facet, face, vertex)` with `v ∈ F` inside one induced pair.
    pub biclique_violations: Vec<(usize, usize, usize)>,
    /// `(face, vertex)` non-incident pairs no proper facet covers.
    pub uncovered: Vec<(usize, usize)>,
}

impl CoveringReport {
    pub fn is_valid(&self) -> bool {
        self.biclique_violations.is_empty() && self.uncovered.is_empty()
    }
}

/// Checks that each facet induces a biclique of the face-vertex
/// non-incidence graph and that the proper facets cover all its edges.
/// `exclude` drops one facet from the covering.
pub fn verify_biclique_covering(w: &ExtensionWitness, exclude: Option<usize>) -> Result<CoveringReport> {
    let bicliques: Vec<InducedBiclique> =
        (0..w.facet_count()).into_par_iter().map(|f| induced_sets(w, f)).collect::<Result<_>>()?;
    let lattice = &w.lattice;
    let mut violations = Vec::new();
    for b in &bicliques {
        for &f in &b.faces {
            for &v in &b.vertices {
                if lattice.contains_vertex(f, v) {
                    violations.push((b.facet.unwrap(), f, v));
                }
            }
        }
    }
    let active: Vec<&InducedBiclique> = bicliques.iter().filter(|b| b.proper && b.facet != exclude).collect();
    let mut uncovered = Vec::new();
    let mut non_incident = 0;
    for f in 0..lattice.len() {
        for v in 0..lattice.vertex_count() {
            if lattice.contains_vertex(f, v) {
                continue;
            }
            non_incident += 1;
            let covered =
                active.iter().any(|b| b.faces.binary_search(&f).is_ok() && b.vertices.binary_search(&v).is_ok());
            if !covered {
                uncovered.push((f, v));
            }
        }
    }
    Ok(CoveringReport { bicliques, excluded: exclude, non_incident_pairs: non_incident, biclique_violations: violations, uncovered })
}

/// `𝒢` is closed under subfaces and `𝒱` is exactly the set of vertices
/// outside `∪𝒢`.
pub fn check_subface_closure(b: &InducedBiclique, lattice: &FaceLattice) -> bool {
    let closed = b.faces.iter().all(|&f| lattice.subfaces(f).iter().all(|g| b.faces.binary_search(g).is_ok()));
    closed && b.vertices == uncovered_vertices(lattice, &b.faces)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConditionVerdict {
    Pass,
    /// `condition` is `a`, `b` or `c`; `witness` lists the offending face
    /// ids (for `c`, the vertex id).
    Fail { condition: char, witness: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleConditions {
    pub verdict: ConditionVerdict,
    /// Condition (a) was only checked on pairs of edges sharing a vertex.
    pub restricted: bool,
}

/// Whether faces `f`, `g` violate condition (a): both outside `𝒢`, with a
/// nonempty meet inside `𝒢`.
pub fn violates_meet_condition(b: &InducedBiclique, lattice: &FaceLattice, f: usize, g: usize) -> bool {
    let m = lattice.meet(f, g);
    let inside = |x: usize| b.faces.binary_search(&x).is_ok();
    m != lattice.empty_face() && !inside(f) && !inside(g) && inside(m)
}

/// Necessary conditions on sets induced by a facet of a simple extension:
/// (a) faces outside `𝒢` with a nonempty meet have their meet outside `𝒢`;
/// (b) nonempty maximal members of `𝒢` are facets of `P`;
/// (c) every vertex outside `𝒱` lies in a facet of `P` that belongs to `𝒢`.
/// Returns the first violation found.
pub fn check_simple_conditions(b: &InducedBiclique, lattice: &FaceLattice, budget: &Budget) -> SimpleConditions {
    let nf = lattice.len();
    let restricted = (nf as u64) * (nf as u64) / 2 > budget.max_pairs;
    let pairs: Vec<(usize, usize)> = if restricted {
        let edges = lattice.faces_of_dim(1);
        edges
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| edges[i + 1..].iter().map(move |&e2| (e, e2)))
            .filter(|&(e, e2)| lattice.mask(e) & lattice.mask(e2) != 0)
            .collect()
    } else {
        (0..nf).flat_map(|f| (f + 1..nf).map(move |g| (f, g))).collect()
    };
    if let Some(&(f, g)) = pairs.iter().find(|&&(f, g)| violates_meet_condition(b, lattice, f, g)) {
        let verdict = ConditionVerdict::Fail { condition: 'a', witness: vec![f, g, lattice.meet(f, g)] };
        return SimpleConditions { verdict, restricted };
    }
    let inside = |x: usize| b.faces.binary_search(&x).is_ok();
    for &f in &b.faces {
        if f == lattice.empty_face() {
            continue;
        }
        let maximal = !b.faces.iter().any(|&g| g != f && lattice.is_subface(f, g));
        if maximal && !lattice.is_facet(f) {
            return SimpleConditions { verdict: ConditionVerdict::Fail { condition: 'b', witness: vec![f] }, restricted };
        }
    }
    for v in 0..lattice.vertex_count() {
        if b.vertices.contains(&v) {
            continue;
        }
        if !lattice.facets().iter().any(|&f| inside(f) && lattice.contains_vertex(f, v)) {
            return SimpleConditions { verdict: ConditionVerdict::Fail { condition: 'c', witness: vec![v] }, restricted };
        }
    }
    SimpleConditions { verdict: ConditionVerdict::Pass, restricted }
}

/// `𝒱` is a proper `𝒩`-closed node set of the skeleton.
pub fn vertex_set_is_closed_check(b: &InducedBiclique, g: &SkeletonGraph) -> bool {
    b.vertices.len() < g.node_count() && is_closed(g, &b.vertices)
}

/// Per-facet results of the extension checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetVerdict {
    pub facet: usize,
    pub proper: bool,
    pub faces: Vec<usize>,
    pub vertices: Vec<usize>,
    pub subface_closed: bool,
    pub conditions: SimpleConditions,
    /// Only checked for proper sets.
    pub vertex_set_closed: Option<bool>,
}

impl FacetVerdict {
    pub fn passes(&self) -> bool {
        !self.proper
            || (self.subface_closed
                && self.conditions.verdict == ConditionVerdict::Pass
                && self.vertex_set_closed != Some(false))
    }

    pub fn failure(&self) -> Option<String> {
        if self.passes() {
            return None;
        }
        if !self.subface_closed {
            return Some("face set not closed under subfaces".into());
        }
        if let ConditionVerdict::Fail { condition, witness } = &self.conditions.verdict {
            return Some(format!("condition ({condition}) fails at {witness:?}"));
        }
        Some("vertex set is not closed".into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionVerdict {
    /// The proper facets do not cover the non-incidence graph.
    NotAnExtension,
    AllConditionsPass,
    CannotBeSimple,
}

impl ExtensionVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtensionVerdict::NotAnExtension => "witness does not certify an extension",
            ExtensionVerdict::AllConditionsPass => "all conditions pass",
            ExtensionVerdict::CannotBeSimple => "cannot be simple",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub covering: CoveringReport,
    pub facets: Vec<FacetVerdict>,
    pub necessary_conditions_pass: bool,
    pub q_simple: bool,
    pub verdict: ExtensionVerdict,
}

/// Runs the covering check and every per-facet necessary condition. A
/// simple `Q` failing a condition is an `InternalInvariantViolation`.
pub fn extension_report(w: &ExtensionWitness, exclude: Option<usize>, budget: &Budget) -> Result<ExtensionReport> {
    if exclude.is_some_and(|f| f >= w.facet_count()) {
        return Err(Error::InvalidInput(format!("facet {} out of range", exclude.unwrap_or_default())));
    }
    let covering = verify_biclique_covering(w, exclude)?;
    let sk = skeleton_from_lattice(&w.lattice);
    let mut facets = Vec::with_capacity(w.facet_count());
    for f in 0..w.facet_count() {
        let b = induced_sets(w, f)?;
        facets.push(FacetVerdict {
            facet: f,
            proper: b.proper,
            subface_closed: check_subface_closure(&b, &w.lattice),
            conditions: check_simple_conditions(&b, &w.lattice, budget),
            vertex_set_closed: b.proper.then(|| vertex_set_is_closed_check(&b, &sk)),
            faces: b.faces,
            vertices: b.vertices,
        });
    }
    let q_simple = is_simple(&w.q_incidence);
    let necessary = facets.iter().all(FacetVerdict::passes);
    if q_simple && !necessary {
        return Err(Error::InternalInvariantViolation("a simple extension failed a necessary condition".into()));
    }
    let verdict = if !covering.is_valid() {
        ExtensionVerdict::NotAnExtension
    } else if necessary {
        ExtensionVerdict::AllConditionsPass
    } else {
        ExtensionVerdict::CannotBeSimple
    };
    Ok(ExtensionReport { covering, facets, necessary_conditions_pass: necessary, q_simple, verdict })
}
