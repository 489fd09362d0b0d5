//! Binary and unary operations on Pythagorean fuzzy graphs.
//!
//! Every operation is a pure function returning a new [`PfGraph`]. Product-like
//! operations label the vertex `(u1, u2)` as the string `"(u1,u2)"`; input labels
//! may therefore not contain `(`, `)` or `,`.

mod registry;

pub use registry::{
    CartesianOp, ComplementOp, CompleteComplementOp, CompositionOp, GraphOperation, JoinOp,
    OpOptions, OperationRegistry, StrongComplementOp, UnionOp,
};

use crate::class::classify;
use crate::degree::PfDegree;
use crate::error::{Error, Result};
use crate::graph::{PairKey, PfGraph, VertexId};
use crate::tolerance::{self, is_zero};

const RESERVED: [char; 3] = ['(', ')', ','];

/// Label of the product vertex `(left, right)`.
pub fn product_label(left: &VertexId, right: &VertexId) -> VertexId {
    VertexId::new(format!("({left},{right})")).expect("composite label is non-empty")
}

fn check_composable(g: &PfGraph) -> Result<()> {
    match g.vertex_ids().find(|id| id.as_str().contains(RESERVED)) {
        Some(id) => Err(Error::LabelClash(format!(
            "label {id:?} contains one of ( ) , and cannot be composed"
        ))),
        None => Ok(()),
    }
}

fn product_vertices(g1: &PfGraph, g2: &PfGraph) -> Result<PfGraph> {
    check_composable(g1)?;
    check_composable(g2)?;
    let mut out = PfGraph::new();
    for (u1, d1) in g1.vertices() {
        for (u2, d2) in g2.vertices() {
            let id = product_label(u1, u2);
            out.add_vertex(id.clone(), d1.min_max(d2))
                .map_err(|_| Error::LabelClash(format!("composite label {id} produced twice")))?;
        }
    }
    Ok(out)
}

/// Edges shared by the Cartesian product and the composition: copies of `E2`
/// inside every `u ∈ V1` fibre and copies of `E1` inside every `w ∈ V2` fibre.
fn add_fibre_edges(out: &mut PfGraph, g1: &PfGraph, g2: &PfGraph) -> Result<()> {
    for (u, du) in g1.vertices() {
        for (e2, q2) in g2.edges() {
            let a = product_label(u, e2.lo());
            let b = product_label(u, e2.hi());
            out.set_edge(a, b, du.min_max(q2))?;
        }
    }
    for (w, dw) in g2.vertices() {
        for (e1, q1) in g1.edges() {
            let a = product_label(e1.lo(), w);
            let b = product_label(e1.hi(), w);
            out.set_edge(a, b, q1.min_max(dw))?;
        }
    }
    Ok(())
}

/// Cartesian product `g1 × g2`.
pub fn cartesian_product(g1: &PfGraph, g2: &PfGraph) -> Result<PfGraph> {
    let mut out = product_vertices(g1, g2)?;
    add_fibre_edges(&mut out, g1, g2)?;
    Ok(out)
}

/// Composition `g1[g2]`: the Cartesian product plus, for every edge `u1v1` of
/// `g1` and every ordered pair `u2 ≠ v2` of `g2`, the edge `(u1,u2)(v1,v2)`
/// with degree `(min(μ(u2), μ(v2), μ(u1v1)), max(ν(u2), ν(v2), ν(u1v1)))`.
pub fn composition(g1: &PfGraph, g2: &PfGraph) -> Result<PfGraph> {
    let mut out = product_vertices(g1, g2)?;
    add_fibre_edges(&mut out, g1, g2)?;
    let right: Vec<(&VertexId, PfDegree)> = g2.vertices().collect();
    for (e1, q1) in g1.edges() {
        for &(u2, d_u2) in &right {
            for &(v2, d_v2) in &right {
                if u2 == v2 {
                    continue;
                }
                let a = product_label(e1.lo(), u2);
                let b = product_label(e1.hi(), v2);
                out.set_edge(a, b, d_u2.min_max(d_v2).min_max(q1))?;
            }
        }
    }
    Ok(out)
}

/// Union `g1 ∪ g2`. Shared labels denote the same vertex; on shared vertices
/// and shared edges the degrees combine as `(max μ, min ν)`.
///
/// When the vertex sets overlap the result is not guaranteed to satisfy the
/// edge non-membership bound: lowering a shared vertex's `ν` can leave an edge
/// from one side above the new bound. Call [`PfGraph::validate`] on the output.
pub fn union(g1: &PfGraph, g2: &PfGraph) -> Result<PfGraph> {
    let mut out = g1.clone();
    for (id, d2) in g2.vertices() {
        match g1.vertex(id) {
            Some(d1) => out.set_vertex_degree(id, d1.max_min(d2)),
            None => out.add_vertex(id.clone(), d2)?,
        }
    }
    for (key, q2) in g2.edges() {
        let merged = match g1.edge_by_key(key) {
            Some(q1) => q1.max_min(q2),
            None => q2,
        };
        out.set_edge(key.lo().clone(), key.hi().clone(), merged)?;
    }
    Ok(out)
}

/// Join `g1 + g2`: the union plus an edge between every `u ∈ V1` and `v ∈ V2`
/// with degree `(min(μ(u), μ(v)), max(ν(u), ν(v)))`. Vertex sets must be disjoint.
pub fn join(g1: &PfGraph, g2: &PfGraph) -> Result<PfGraph> {
    if let Some(shared) = g1.vertex_ids().find(|id| g2.contains_vertex(id)) {
        return Err(Error::JoinOverlap(shared.clone()));
    }
    let mut out = union(g1, g2)?;
    for (u, du) in g1.vertices() {
        for (v, dv) in g2.vertices() {
            out.set_edge(u.clone(), v.clone(), du.min_max(dv))?;
        }
    }
    Ok(out)
}

/// `bound − value`, with floating-point residue near zero clamped to 0.
fn residual(bound: f64, value: f64, key: &PairKey) -> Result<f64> {
    let r = bound - value;
    if r < -tolerance::epsilon() {
        return Err(Error::Internal(format!(
            "pair {key}: degree {value} exceeds its bound {bound}; input is not a valid graph"
        )));
    }
    Ok(if is_zero(r) { 0.0 } else { r })
}

/// General complement over all unordered vertex pairs: a pair with a zero
/// component receives the full bound for that component, otherwise
/// `bound − degree`. Vertex degrees are unchanged.
pub fn complement(g: &PfGraph) -> Result<PfGraph> {
    let mut out = g.without_edges();
    for key in g.pairs() {
        let bound = g.bound(key.lo(), key.hi());
        let q = g.edge_by_key(&key).unwrap_or(PfDegree::ZERO);
        let mu = if is_zero(q.mu) {
            bound.mu
        } else {
            residual(bound.mu, q.mu, &key)?
        };
        let nu = if is_zero(q.nu) {
            bound.nu
        } else {
            residual(bound.nu, q.nu, &key)?
        };
        out.set_pair(key, PfDegree::raw(mu, nu));
    }
    Ok(out)
}

/// Zero-or-bound complement shared by the strong and complete variants: a
/// positive component becomes 0, a zero component becomes the bound.
fn toggle_complement(g: &PfGraph) -> PfGraph {
    let mut out = g.without_edges();
    for key in g.pairs() {
        let bound = g.bound(key.lo(), key.hi());
        let q = g.edge_by_key(&key).unwrap_or(PfDegree::ZERO);
        let mu = if is_zero(q.mu) { bound.mu } else { 0.0 };
        let nu = if is_zero(q.nu) { bound.nu } else { 0.0 };
        out.set_pair(key, PfDegree::raw(mu, nu));
    }
    out
}

/// Complement of a strong graph. Fails with `NotStrong` unless `force` is set.
pub fn strong_complement(g: &PfGraph, force: bool) -> Result<PfGraph> {
    if !force {
        let c = classify(g);
        if !c.is_strong {
            let pair = c.witnesses.strong.expect("non-strong graphs carry a witness");
            return Err(Error::NotStrong(pair));
        }
    }
    Ok(toggle_complement(g))
}

/// Complement of a complete graph. Fails with `NotComplete` unless `force` is set.
pub fn complete_complement(g: &PfGraph, force: bool) -> Result<PfGraph> {
    if !force {
        let c = classify(g);
        if !c.is_complete {
            let pair = c.witnesses.complete.expect("non-complete graphs carry a witness");
            return Err(Error::NotComplete(pair));
        }
    }
    Ok(toggle_complement(g))
}
