use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree::PfDegree;
use crate::error::{Error, Result};
use crate::tolerance::approx_le;

/// Vertex label. Labels are compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::InvalidLabel(label));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    /// Panics on the empty string; intended for literals in tests and examples.
    fn from(s: &str) -> Self {
        VertexId::new(s).expect("vertex label must be non-empty")
    }
}

/// Unordered vertex pair in canonical (`lo < hi`) order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairKey {
    lo: VertexId,
    hi: VertexId,
}

impl PairKey {
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(PairKey { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Ok(PairKey { lo: v, hi: u }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
        }
    }

    pub fn lo(&self) -> &VertexId {
        &self.lo
    }

    pub fn hi(&self) -> &VertexId {
        &self.hi
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.lo == v || &self.hi == v
    }
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}--{}", self.lo, self.hi)
    }
}

/// One failed constraint found by [`PfGraph::validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A vertex degree component lies outside `[0, 1]` or `μ² + ν² > 1`.
    VertexDegree {
        vertex: VertexId,
        mu: f64,
        nu: f64,
    },
    /// An edge degree component lies outside `[0, 1]` or `μ² + ν² > 1`.
    EdgeDegree { edge: PairKey, mu: f64, nu: f64 },
    /// Edge membership exceeds the smaller endpoint membership.
    EdgeMembershipBound {
        edge: PairKey,
        mu: f64,
        bound: f64,
    },
    /// Edge non-membership exceeds the larger endpoint non-membership.
    EdgeNonMembershipBound {
        edge: PairKey,
        nu: f64,
        bound: f64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexDegree { vertex, mu, nu } => {
                write!(f, "vertex {vertex}: ({mu}, {nu}) is not a Pythagorean degree")
            }
            Violation::EdgeDegree { edge, mu, nu } => {
                write!(f, "edge {edge}: ({mu}, {nu}) is not a Pythagorean degree")
            }
            Violation::EdgeMembershipBound { edge, mu, bound } => write!(
                f,
                "edge {edge}: membership {mu} exceeds min of endpoint memberships {bound}"
            ),
            Violation::EdgeNonMembershipBound { edge, nu, bound } => write!(
                f,
                "edge {edge}: non-membership {nu} exceeds max of endpoint non-memberships {bound}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A candidate Pythagorean fuzzy graph: a labelled vertex set with a degree per
/// vertex and an undirected edge map keyed by [`PairKey`].
///
/// Structural invariants (unique labels, no self-loops, edge endpoints declared)
/// are enforced on insertion. Numeric constraints are not; call
/// [`PfGraph::validate`]. Edges with degree `(0, 0)` mean "no edge" and are never
/// stored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PfGraph {
    vertices: BTreeMap<VertexId, PfDegree>,
    edges: BTreeMap<PairKey, PfDegree>,
}

impl PfGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from vertex and edge lists. Edges with degree `(0, 0)` are dropped.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (VertexId, PfDegree)>,
        E: IntoIterator<Item = (VertexId, VertexId, PfDegree)>,
    {
        let mut g = PfGraph::new();
        for (id, d) in vertices {
            g.add_vertex(id, d)?;
        }
        for (u, v, d) in edges {
            g.add_edge(u, v, d)?;
        }
        Ok(g)
    }

    /// Convenience for literals: `PfGraph::build(&[("a", 0.5, 0.7)], &[("a", "b", 0.4, 0.7)])`.
    pub fn build(vertices: &[(&str, f64, f64)], edges: &[(&str, &str, f64, f64)]) -> Result<Self> {
        let vs = vertices
            .iter()
            .map(|&(id, mu, nu)| Ok((VertexId::new(id)?, PfDegree::raw(mu, nu))))
            .collect::<Result<Vec<_>>>()?;
        let es = edges
            .iter()
            .map(|&(u, v, mu, nu)| Ok((VertexId::new(u)?, VertexId::new(v)?, PfDegree::raw(mu, nu))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(vs, es)
    }

    pub fn add_vertex(&mut self, id: VertexId, degree: PfDegree) -> Result<()> {
        if self.vertices.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        self.vertices.insert(id, degree);
        Ok(())
    }

    /// Insert an edge; fails if the pair already carries one.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, degree: PfDegree) -> Result<()> {
        let key = self.checked_key(u, v)?;
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(key));
        }
        if !degree.is_zero() {
            self.edges.insert(key, degree);
        }
        Ok(())
    }

    /// Insert or overwrite an edge; `(0, 0)` removes it.
    pub fn set_edge(&mut self, u: VertexId, v: VertexId, degree: PfDegree) -> Result<()> {
        let key = self.checked_key(u, v)?;
        self.set_pair(key, degree);
        Ok(())
    }

    /// Overwrite the degree of an existing vertex; unknown ids are ignored.
    pub(crate) fn set_vertex_degree(&mut self, id: &VertexId, degree: PfDegree) {
        if let Some(d) = self.vertices.get_mut(id) {
            *d = degree;
        }
    }

    /// Same vertices and degrees, no edges.
    pub fn without_edges(&self) -> PfGraph {
        PfGraph {
            vertices: self.vertices.clone(),
            edges: BTreeMap::new(),
        }
    }

    pub(crate) fn set_pair(&mut self, key: PairKey, degree: PfDegree) {
        if degree.is_zero() {
            self.edges.remove(&key);
        } else {
            self.edges.insert(key, degree);
        }
    }

    fn checked_key(&self, u: VertexId, v: VertexId) -> Result<PairKey> {
        let key = PairKey::new(u, v)?;
        let missing = [&key.lo, &key.hi]
            .into_iter()
            .find(|end| !self.vertices.contains_key(*end))
            .cloned();
        match missing {
            Some(vertex) => Err(Error::DanglingEdge { edge: key, vertex }),
            None => Ok(key),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, id: &VertexId) -> bool {
        self.vertices.contains_key(id)
    }

    pub fn vertex(&self, id: &VertexId) -> Option<PfDegree> {
        self.vertices.get(id).copied()
    }

    /// Vertices in label order.
    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, PfDegree)> + '_ {
        self.vertices.iter().map(|(k, d)| (k, *d))
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.vertices.keys()
    }

    /// Edges in canonical pair order.
    pub fn edges(&self) -> impl Iterator<Item = (&PairKey, PfDegree)> + '_ {
        self.edges.iter().map(|(k, d)| (k, *d))
    }

    pub fn edge(&self, u: &VertexId, v: &VertexId) -> Option<PfDegree> {
        let key = PairKey::new(u.clone(), v.clone()).ok()?;
        self.edges.get(&key).copied()
    }

    pub fn edge_by_key(&self, key: &PairKey) -> Option<PfDegree> {
        self.edges.get(key).copied()
    }

    /// Edge degree with absent pairs (and self-pairs) read as `(0, 0)`.
    pub fn edge_or_zero(&self, u: &VertexId, v: &VertexId) -> PfDegree {
        self.edge(u, v).unwrap_or(PfDegree::ZERO)
    }

    /// `(min μ, max ν)` of the two endpoints: the largest degree an edge `uv`
    /// may carry. Panics if either vertex is missing.
    pub fn bound(&self, u: &VertexId, v: &VertexId) -> PfDegree {
        let du = self.vertices[u];
        let dv = self.vertices[v];
        du.min_max(dv)
    }

    /// Every unordered pair of distinct vertices, in canonical order.
    pub fn pairs(&self) -> Vec<PairKey> {
        let ids: Vec<&VertexId> = self.vertices.keys().collect();
        let mut out = Vec::with_capacity(ids.len() * ids.len().saturating_sub(1) / 2);
        for (i, u) in ids.iter().enumerate() {
            for v in &ids[i + 1..] {
                out.push(PairKey {
                    lo: (*u).clone(),
                    hi: (*v).clone(),
                });
            }
        }
        out
    }

    /// Check every numeric constraint; an empty report means the candidate is
    /// a Pythagorean fuzzy graph.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (id, d) in &self.vertices {
            if !d.is_pythagorean() {
                violations.push(Violation::VertexDegree {
                    vertex: id.clone(),
                    mu: d.mu,
                    nu: d.nu,
                });
            }
        }
        for (key, d) in &self.edges {
            if !d.is_pythagorean() {
                violations.push(Violation::EdgeDegree {
                    edge: key.clone(),
                    mu: d.mu,
                    nu: d.nu,
                });
            }
            let bound = self.bound(&key.lo, &key.hi);
            if !approx_le(d.mu, bound.mu) {
                violations.push(Violation::EdgeMembershipBound {
                    edge: key.clone(),
                    mu: d.mu,
                    bound: bound.mu,
                });
            }
            if !approx_le(d.nu, bound.nu) {
                violations.push(Violation::EdgeNonMembershipBound {
                    edge: key.clone(),
                    nu: d.nu,
                    bound: bound.nu,
                });
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// `Ok(self)` when valid, otherwise a `ConstraintViolation` carrying the report.
    pub fn into_validated(self) -> Result<Self> {
        let report = self.validate();
        if report.is_valid() {
            Ok(self)
        } else {
            Err(Error::ConstraintViolation(report))
        }
    }

    /// Induced subgraph on the given vertices (unknown ids are ignored).
    pub fn induced<'a>(&self, keep: impl IntoIterator<Item = &'a VertexId>) -> PfGraph {
        let mut out = PfGraph::new();
        for id in keep {
            if let Some(d) = self.vertex(id) {
                out.vertices.insert(id.clone(), d);
            }
        }
        for (key, d) in &self.edges {
            if out.vertices.contains_key(&key.lo) && out.vertices.contains_key(&key.hi) {
                out.edges.insert(key.clone(), *d);
            }
        }
        out
    }

    /// Rename every vertex through `f`.
    pub fn relabel(&self, mut f: impl FnMut(&VertexId) -> Result<VertexId>) -> Result<PfGraph> {
        let mut names = BTreeMap::new();
        let mut out = PfGraph::new();
        for (id, d) in &self.vertices {
            let new = f(id)?;
            out.add_vertex(new.clone(), *d)?;
            names.insert(id, new);
        }
        for (key, d) in &self.edges {
            out.add_edge(names[&key.lo].clone(), names[&key.hi].clone(), *d)?;
        }
        Ok(out)
    }

    /// Prefix every label with `prefix`.
    pub fn prefixed(&self, prefix: &str) -> PfGraph {
        self.relabel(|id| VertexId::new(format!("{prefix}{id}")))
            .expect("prefixing keeps labels distinct")
    }

    /// Same vertex set and, on every vertex and every unordered pair, degrees
    /// equal within tolerance (absent pairs read as `(0, 0)`).
    pub fn approx_eq(&self, other: &PfGraph) -> bool {
        if self.vertices.len() != other.vertices.len() {
            return false;
        }
        for (id, d) in &self.vertices {
            match other.vertices.get(id) {
                Some(o) if d.approx_eq(o) => {}
                _ => return false,
            }
        }
        let keys = self.edges.keys().chain(other.edges.keys());
        for key in keys {
            let a = self.edges.get(key).copied().unwrap_or(PfDegree::ZERO);
            let b = other.edges.get(key).copied().unwrap_or(PfDegree::ZERO);
            if !a.approx_eq(&b) {
                return false;
            }
        }
        true
    }
}

/// Free-function form of [`PfGraph::validate`].
pub fn validate(g: &PfGraph) -> ValidationReport {
    g.validate()
}
