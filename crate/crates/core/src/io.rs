//! JSON formats. Rationals are strings `"p/q"` or `"p"`; matchings use
//! 1-based node labels, everything else is 0-based.

use serde::{Deserialize, Serialize};

use crate::biclique::ExtensionWitness;
use crate::budget::Budget;
use crate::construct::{Extension, Projection};
use crate::error::{Error, Result};
use crate::family::{
    hypersimplex_skeleton, matching_skeleton, path_skeleton, tree_skeleton, DagDesc, FamilySkeleton,
};
use crate::graph::SkeletonGraph;
use crate::matching::{CommonNeighborOutcome, ExchangeCase, ExchangeStep, Matching, NeighborTrace};
use crate::polytope::{convex_hull_facets, HPolytope, Inequality, VPolytope};
use crate::rational::{format_rat, parse_rat, Rat, RatVec};

fn rats(xs: &[Rat]) -> Vec<String> {
    xs.iter().map(format_rat).collect()
}

fn parse_vec(xs: &[String]) -> Result<RatVec> {
    xs.iter().map(|s| parse_rat(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub normal: Vec<String>,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytopeJson {
    pub ambient_dim: usize,
    pub inequalities: Vec<RowJson>,
    #[serde(default)]
    pub equations: Vec<RowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPolytopeJson {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<String>>,
}

/// Either polytope format, told apart by its keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolytopeJson {
    V(VPolytopeJson),
    H(HPolytopeJson),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionJson {
    pub matrix: Vec<Vec<String>>,
    pub offset: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionJson {
    #[serde(rename = "Q")]
    pub q: HPolytopeJson,
    pub projection: ProjectionJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    #[serde(rename = "P")]
    pub p: VPolytopeJson,
    /// Either form; a V-form `Q` is converted to its facets.
    #[serde(rename = "Q")]
    pub q: PolytopeJson,
    pub projection: ProjectionJson,
}

impl WitnessJson {
    pub fn to_witness(&self, budget: &Budget) -> Result<ExtensionWitness> {
        let q = match &self.q {
            PolytopeJson::H(h) => h.to_polytope()?,
            PolytopeJson::V(v) => convex_hull_facets(&v.to_polytope()?, budget)?.0,
        };
        ExtensionWitness::new(self.p.to_polytope()?, q, self.projection.to_projection()?, budget)
    }
}

impl From<&Inequality> for RowJson {
    fn from(r: &Inequality) -> Self {
        RowJson { normal: rats(&r.normal), rhs: format_rat(&r.rhs) }
    }
}

impl RowJson {
    pub fn to_inequality(&self) -> Result<Inequality> {
        Ok(Inequality::new(parse_vec(&self.normal)?, parse_rat(&self.rhs)?))
    }
}

impl From<&HPolytope> for HPolytopeJson {
    fn from(h: &HPolytope) -> Self {
        HPolytopeJson {
            ambient_dim: h.ambient_dim,
            inequalities: h.inequalities.iter().map(RowJson::from).collect(),
            equations: h.equations.iter().map(RowJson::from).collect(),
        }
    }
}

impl HPolytopeJson {
    pub fn to_polytope(&self) -> Result<HPolytope> {
        let rows = |rs: &[RowJson]| rs.iter().map(RowJson::to_inequality).collect::<Result<Vec<_>>>();
        HPolytope::new(self.ambient_dim, rows(&self.inequalities)?, rows(&self.equations)?)
    }
}

impl From<&VPolytope> for VPolytopeJson {
    fn from(v: &VPolytope) -> Self {
        VPolytopeJson { ambient_dim: v.ambient_dim, vertices: v.vertices().iter().map(|p| rats(p)).collect() }
    }
}

impl VPolytopeJson {
    /// Points are reduced to the vertices of their hull.
    pub fn to_polytope(&self) -> Result<VPolytope> {
        let pts = self.vertices.iter().map(|p| parse_vec(p)).collect::<Result<Vec<_>>>()?;
        VPolytope::hull_of(self.ambient_dim, pts)
    }
}

impl From<&Projection> for ProjectionJson {
    fn from(p: &Projection) -> Self {
        ProjectionJson { matrix: p.matrix.iter().map(|r| rats(r)).collect(), offset: rats(&p.offset) }
    }
}

impl ProjectionJson {
    pub fn to_projection(&self) -> Result<Projection> {
        let matrix = self.matrix.iter().map(|r| parse_vec(r)).collect::<Result<Vec<_>>>()?;
        let offset = parse_vec(&self.offset)?;
        if offset.len() != matrix.len() || matrix.iter().any(|r| r.len() != matrix[0].len()) {
            return Err(Error::DimensionMismatch("projection rows and offset disagree".into()));
        }
        Ok(Projection { matrix, offset })
    }
}

impl From<&Extension> for ExtensionJson {
    fn from(e: &Extension) -> Self {
        ExtensionJson { q: (&e.q).into(), projection: (&e.projection).into() }
    }
}

impl ExtensionJson {
    pub fn to_extension(&self) -> Result<Extension> {
        Ok(Extension { q: self.q.to_polytope()?, projection: self.projection.to_projection()? })
    }
}

/// Skeleton export. On input either `adjacency` or `edges` may be given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub node_count: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub adjacency: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<String>,
}

impl From<&SkeletonGraph> for GraphJson {
    fn from(g: &SkeletonGraph) -> Self {
        GraphJson {
            node_count: g.node_count(),
            edges: Vec::new(),
            adjacency: (0..g.node_count()).map(|u| g.neighbors(u).to_vec()).collect(),
            labels: g.labels().map(<[String]>::to_vec),
            fingerprint: Some(g.fingerprint()),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<SkeletonGraph> {
        if !self.adjacency.is_empty() && self.adjacency.len() != self.node_count {
            return Err(Error::InvalidInput("adjacency list length differs from node_count".into()));
        }
        let mut edges = self.edges.clone();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            edges.extend(nbrs.iter().map(|&v| (u.min(v), u.max(v))));
        }
        let g = SkeletonGraph::new(self.node_count, edges)?;
        match &self.labels {
            Some(l) if l.len() == self.node_count => Ok(g.with_labels(l.clone())),
            Some(_) => Err(Error::InvalidInput("label count differs from node_count".into())),
            None => Ok(g),
        }
    }
}

/// A perfect matching as a sorted list of 1-based pairs.
pub fn matching_to_json(m: &Matching) -> Vec<[usize; 2]> {
    m.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect()
}

pub fn matching_from_json(pairs: &[[usize; 2]]) -> Result<Matching> {
    if pairs.iter().flatten().any(|&u| u == 0) {
        return Err(Error::InvalidInput("matching labels are 1-based".into()));
    }
    let edges: Vec<(usize, usize)> = pairs.iter().map(|p| (p[0] - 1, p[1] - 1)).collect();
    Matching::from_edges(2 * pairs.len(), &edges)
}

fn one_based(e: &(usize, usize)) -> [usize; 2] {
    [e.0 + 1, e.1 + 1]
}

/// An exchange step with 1-based node labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepJson {
    pub component: Vec<usize>,
    pub edge: [usize; 2],
    pub j: u8,
    pub case: ExchangeCase,
    pub removed: [[usize; 2]; 2],
    pub added: [[usize; 2]; 2],
    pub components_before: usize,
    pub components_after: usize,
}

impl From<&ExchangeStep> for StepJson {
    fn from(s: &ExchangeStep) -> Self {
        StepJson {
            component: s.component.iter().map(|u| u + 1).collect(),
            edge: one_based(&s.edge),
            j: s.j,
            case: s.case,
            removed: [one_based(&s.removed[0]), one_based(&s.removed[1])],
            added: [one_based(&s.added[0]), one_based(&s.added[1])],
            components_before: s.components_before,
            components_after: s.components_after,
        }
    }
}

/// Common-neighbor result and trace with 1-based node labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborTraceJson {
    /// `pairwise_adjacent` or `common_neighbor`.
    pub outcome: &'static str,
    pub matching: Option<Vec<[usize; 2]>>,
    pub initial: Option<Vec<[usize; 2]>>,
    pub stripped: Vec<[usize; 2]>,
    pub l2_special_case: bool,
    pub steps: Vec<StepJson>,
}

impl From<&NeighborTrace> for NeighborTraceJson {
    fn from(t: &NeighborTrace) -> Self {
        let (outcome, matching) = match &t.outcome {
            CommonNeighborOutcome::PairwiseAdjacent => ("pairwise_adjacent", None),
            CommonNeighborOutcome::CommonNeighbor(m) => ("common_neighbor", Some(matching_to_json(m))),
        };
        NeighborTraceJson {
            outcome,
            matching,
            initial: t.initial.as_ref().map(matching_to_json),
            stripped: t.stripped.iter().map(one_based).collect(),
            l2_special_case: t.l2_special_case,
            steps: t.steps.iter().map(StepJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DagJson {
    pub node_count: usize,
    pub arcs: Vec<(usize, usize)>,
    pub source: usize,
    pub sink: usize,
}

impl DagJson {
    pub fn to_dag(&self) -> Result<DagDesc> {
        DagDesc::new(self.node_count, self.arcs.clone(), self.source, self.sink)
    }
}

impl From<&DagDesc> for DagJson {
    fn from(d: &DagDesc) -> Self {
        DagJson { node_count: d.node_count, arcs: d.arcs.clone(), source: d.source, sink: d.sink }
    }
}

/// `{"family": ..., "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum FamilyDescriptor {
    Hypersimplex { n: usize, k: usize },
    SpanningTree { n: usize },
    Flow { dag: DagJson },
    PerfectMatching { nodes: usize },
}

impl FamilyDescriptor {
    pub fn skeleton(&self, budget: &Budget) -> Result<FamilySkeleton> {
        match self {
            FamilyDescriptor::Hypersimplex { n, k } => hypersimplex_skeleton(*n, *k, budget),
            FamilyDescriptor::SpanningTree { n } => tree_skeleton(*n, budget),
            FamilyDescriptor::Flow { dag } => path_skeleton(&dag.to_dag()?, budget),
            FamilyDescriptor::PerfectMatching { nodes } => matching_skeleton(*nodes, budget),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))
}
