//! Exact tools for simple extensions of polytopes: reflection, polygon,
//! cone and disjunctive constructions; biclique certificates over face
//! lattices; common-neighbor closure lower bounds on skeleton graphs;
//! skeleton oracles for four combinatorial families; and the matching
//! exchange procedure producing three common neighbors.

pub mod biclique;
pub mod budget;
pub mod closure;
pub mod construct;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod matching;
pub mod polytope;
pub mod rational;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::SkeletonGraph;
