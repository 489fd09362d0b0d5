//! JSON documents and DOT export.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "vertices": [{"id": "a", "mu": 0.5, "nu": 0.7}],
//!   "edges": [{"u": "a", "v": "b", "mu": 0.4, "nu": 0.7}]
//! }
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::degree::PfDegree;
use crate::error::{Error, Result};
use crate::graph::{PairKey, PfGraph, VertexId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: String,
    pub mu: f64,
    pub nu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: String,
    pub v: String,
    pub mu: f64,
    pub nu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub format_version: u32,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

impl From<&PfGraph> for GraphDocument {
    fn from(g: &PfGraph) -> Self {
        GraphDocument {
            format_version: FORMAT_VERSION,
            vertices: g
                .vertices()
                .map(|(id, d)| VertexRecord {
                    id: id.to_string(),
                    mu: d.mu,
                    nu: d.nu,
                })
                .collect(),
            edges: g
                .edges()
                .map(|(k, d)| EdgeRecord {
                    u: k.lo().to_string(),
                    v: k.hi().to_string(),
                    mu: d.mu,
                    nu: d.nu,
                })
                .collect(),
        }
    }
}

fn check_range(what: &str, mu: f64, nu: f64) -> Result<()> {
    if !PfDegree::raw(mu, nu).in_unit_range() {
        return Err(Error::MalformedDocument(format!(
            "{what}: degree ({mu}, {nu}) has a component outside [0, 1]"
        )));
    }
    Ok(())
}

fn label(s: &str, what: &str) -> Result<VertexId> {
    VertexId::new(s).map_err(|_| Error::MalformedDocument(format!("{what} has an empty id")))
}

impl GraphDocument {
    /// Build the graph without running the numeric validation. Structural
    /// errors are still reported; `(0, 0)` edges are dropped and listed in the
    /// returned warnings.
    pub fn to_graph_unchecked(&self) -> Result<(PfGraph, Vec<String>)> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::MalformedDocument(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        let mut g = PfGraph::new();
        for (i, r) in self.vertices.iter().enumerate() {
            let id = label(&r.id, &format!("vertex #{i}"))?;
            check_range(&format!("vertex {id}"), r.mu, r.nu)?;
            g.add_vertex(id, PfDegree::raw(r.mu, r.nu))?;
        }
        let mut seen = BTreeSet::new();
        let mut warnings = Vec::new();
        for (i, r) in self.edges.iter().enumerate() {
            let u = label(&r.u, &format!("edge #{i}"))?;
            let v = label(&r.v, &format!("edge #{i}"))?;
            let key = PairKey::new(u.clone(), v.clone())
                .map_err(|_| Error::MalformedDocument(format!("edge #{i} is a self-loop on {u}")))?;
            check_range(&format!("edge {key}"), r.mu, r.nu)?;
            if !seen.insert(key.clone()) {
                return Err(Error::DuplicateEdge(key));
            }
            let d = PfDegree::raw(r.mu, r.nu);
            if d.is_zero() {
                // still reports undeclared endpoints
                g.add_edge(u, v, d)?;
                let msg = format!("edge {key} has degree (0, 0) and was dropped");
                log::warn!("{msg}");
                warnings.push(msg);
                continue;
            }
            g.add_edge(u, v, d)?;
        }
        Ok((g, warnings))
    }
}

fn read_document(text: &str) -> Result<GraphDocument> {
    serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))
}

/// Parse a document into a validated graph.
pub fn parse(text: &str) -> Result<PfGraph> {
    parse_with_warnings(text).map(|(g, _)| g)
}

/// [`parse`], also returning a message per dropped `(0, 0)` edge.
pub fn parse_with_warnings(text: &str) -> Result<(PfGraph, Vec<String>)> {
    let (g, warnings) = parse_unchecked(text)?;
    Ok((g.into_validated()?, warnings))
}

/// Parse without the numeric validation, for reporting on candidate graphs.
pub fn parse_unchecked(text: &str) -> Result<(PfGraph, Vec<String>)> {
    read_document(text)?.to_graph_unchecked()
}

/// Pretty JSON with vertices in label order and edges in canonical pair
/// order; numbers use the shortest representation that reads back exactly.
pub fn render(g: &PfGraph) -> String {
    let mut out = serde_json::to_string_pretty(&GraphDocument::from(g)).expect("documents always serialize");
    out.push('\n');
    out
}

fn is_plain_id(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

fn dot_id(s: &str) -> String {
    if is_plain_id(s) {
        s.to_string()
    } else {
        format!("\"{}\"", escape(s))
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT graph; vertices labelled `id (μ, ν)`, edges `(μ, ν)`.
pub fn to_dot(g: &PfGraph) -> String {
    let mut out = String::from("graph G {\n");
    for (id, d) in g.vertices() {
        let _ = writeln!(
            out,
            "  {} [label=\"{} ({}, {})\"];",
            dot_id(id.as_str()),
            escape(id.as_str()),
            d.mu,
            d.nu
        );
    }
    for (k, d) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"({}, {})\"];",
            dot_id(k.lo().as_str()),
            dot_id(k.hi().as_str()),
            d.mu,
            d.nu
        );
    }
    out.push_str("}\n");
    out
}
