//! Pythagorean fuzzy graphs.
//!
//! A Pythagorean fuzzy graph attaches a degree `(μ, ν)` with `μ² + ν² ≤ 1` to
//! every vertex and every edge of a simple undirected graph, with each edge
//! bounded by its endpoints: `μ(uv) ≤ min(μ(u), μ(v))` and
//! `ν(uv) ≤ max(ν(u), ν(v))`.
//!
//! - [`graph`] and [`degree`]: value types and validation
//! - [`algebra`]: products, union, join, complements
//! - [`class`]: strength/completeness predicates, sum identities, self-complementarity
//! - [`morph`]: homomorphism and isomorphism search
//! - [`gen`]: seeded random graphs
//! - [`io`]: JSON documents and DOT export

pub mod algebra;
pub mod class;
pub mod degree;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod morph;
pub mod tolerance;

pub use degree::PfDegree;
pub use error::{Error, Result};
pub use graph::{PairKey, PfGraph, ValidationReport, VertexId, Violation};
