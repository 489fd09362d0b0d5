//! Homomorphisms, isomorphisms, weak and co-weak isomorphisms.
//!
//! | kind        | map       | vertices          | pairs checked | pair condition    |
//! |-------------|-----------|-------------------|---------------|-------------------|
//! | homomorphism| any       | μ1 ≤ μ2, ν1 ≥ ν2  | edges of `g1` | μ1 ≤ μ2, ν1 ≥ ν2  |
//! | isomorphism | bijection | equal             | all pairs     | equal             |
//! | weak        | bijection | equal             | edges of `g1` | μ1 ≤ μ2, ν1 ≥ ν2  |
//! | co-weak     | bijection | μ1 ≤ μ2, ν1 ≥ ν2  | edges of `g1` | equal             |
//!
//! Absent target pairs (and, for non-injective maps, collapsed pairs) read as
//! `(0, 0)`.

mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use search::{ExhaustiveSearch, MorphismSearch, PrunedSearch, SearchRegistry};

use crate::degree::PfDegree;
use crate::error::{Error, Result};
use crate::graph::{PfGraph, VertexId};
use crate::tolerance::approx_le;

/// Vertex map `V1 → V2`.
pub type Mapping = BTreeMap<VertexId, VertexId>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismKind {
    Homomorphism,
    Isomorphism,
    WeakIsomorphism,
    CoweakIsomorphism,
}

impl MorphismKind {
    pub const ALL: [MorphismKind; 4] = [
        MorphismKind::Homomorphism,
        MorphismKind::Isomorphism,
        MorphismKind::WeakIsomorphism,
        MorphismKind::CoweakIsomorphism,
    ];

    pub fn is_bijective(self) -> bool {
        self != MorphismKind::Homomorphism
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MorphismKind::Homomorphism => "homomorphism",
            MorphismKind::Isomorphism => "isomorphism",
            MorphismKind::WeakIsomorphism => "weak_isomorphism",
            MorphismKind::CoweakIsomorphism => "coweak_isomorphism",
        }
    }

    /// Vertex condition between a source degree and its image's degree.
    pub fn vertex_ok(self, src: PfDegree, dst: PfDegree) -> bool {
        match self {
            MorphismKind::Homomorphism | MorphismKind::CoweakIsomorphism => dominated(src, dst),
            MorphismKind::Isomorphism | MorphismKind::WeakIsomorphism => src.approx_eq(&dst),
        }
    }

    /// Pair condition between a source pair degree and its image pair degree.
    pub fn pair_ok(self, src: PfDegree, dst: PfDegree) -> bool {
        match self {
            MorphismKind::Homomorphism | MorphismKind::WeakIsomorphism => dominated(src, dst),
            MorphismKind::Isomorphism | MorphismKind::CoweakIsomorphism => src.approx_eq(&dst),
        }
    }

    /// Whether the pair condition ranges over every unordered pair rather
    /// than only over the edges of the source graph.
    pub fn checks_all_pairs(self) -> bool {
        self == MorphismKind::Isomorphism
    }
}

/// `μ1 ≤ μ2` and `ν1 ≥ ν2`.
fn dominated(src: PfDegree, dst: PfDegree) -> bool {
    approx_le(src.mu, dst.mu) && approx_le(dst.nu, src.nu)
}

impl fmt::Display for MorphismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MorphismKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "homo" | "homomorphism" => Ok(MorphismKind::Homomorphism),
            "iso" | "isomorphism" => Ok(MorphismKind::Isomorphism),
            "weak" | "weak_isomorphism" => Ok(MorphismKind::WeakIsomorphism),
            "coweak" | "coweak_isomorphism" => Ok(MorphismKind::CoweakIsomorphism),
            _ => Err(Error::UnknownName {
                what: "morphism kind",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismReport {
    pub kind: MorphismKind,
    pub found: bool,
    pub witness: Option<Mapping>,
    /// Candidate (partial) assignments examined by the strategy.
    pub search_space: u64,
}

/// Largest source graph the search accepts by default.
pub const DEFAULT_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: DEFAULT_CAP }
    }
}

/// Search with the pruned strategy and the default cap.
pub fn find_morphism(g1: &PfGraph, g2: &PfGraph, kind: MorphismKind) -> Result<MorphismReport> {
    find_morphism_with(g1, g2, kind, &SearchConfig::default())
}

pub fn find_morphism_with(
    g1: &PfGraph,
    g2: &PfGraph,
    kind: MorphismKind,
    cfg: &SearchConfig,
) -> Result<MorphismReport> {
    find_morphism_using(&PrunedSearch, g1, g2, kind, cfg)
}

/// Search with an explicit strategy. The result is the lexicographically least
/// witness (source vertices in label order, each mapped to the smallest
/// admissible target label), whatever the strategy.
pub fn find_morphism_using(
    strategy: &dyn MorphismSearch,
    g1: &PfGraph,
    g2: &PfGraph,
    kind: MorphismKind,
    cfg: &SearchConfig,
) -> Result<MorphismReport> {
    let not_found = MorphismReport {
        kind,
        found: false,
        witness: None,
        search_space: 0,
    };
    if kind.is_bijective() && g1.vertex_count() != g2.vertex_count() {
        return Ok(not_found);
    }
    if g1.vertex_count() > cfg.cap {
        return Err(Error::SearchCapExceeded {
            vertices: g1.vertex_count(),
            cap: cfg.cap,
        });
    }
    if g2.is_empty() && !g1.is_empty() {
        return Ok(not_found);
    }
    Ok(strategy.search(g1, g2, kind))
}

/// One failed condition found by [`verify_morphism`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MorphismViolation {
    Vertex {
        vertex: VertexId,
        image: VertexId,
        source: PfDegree,
        target: PfDegree,
    },
    Pair {
        u: VertexId,
        v: VertexId,
        image_u: VertexId,
        image_v: VertexId,
        source: PfDegree,
        target: PfDegree,
    },
    /// Two sources share an image under a kind that needs a bijection.
    NotInjective { image: VertexId },
    /// A target vertex is missed under a kind that needs a bijection.
    NotSurjective { vertex: VertexId },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::Vertex {
                vertex,
                image,
                source,
                target,
            } => write!(f, "vertex {vertex} -> {image}: {source} vs {target}"),
            MorphismViolation::Pair {
                u,
                v,
                image_u,
                image_v,
                source,
                target,
            } => write!(f, "pair {u}--{v} -> {image_u}--{image_v}: {source} vs {target}"),
            MorphismViolation::NotInjective { image } => write!(f, "{image} is hit twice"),
            MorphismViolation::NotSurjective { vertex } => write!(f, "{vertex} is never hit"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismCheck {
    pub ok: bool,
    pub violations: Vec<MorphismViolation>,
}

/// Check `map` against the conditions of `kind`, listing every failure.
pub fn verify_morphism(g1: &PfGraph, g2: &PfGraph, kind: MorphismKind, map: &Mapping) -> Result<MorphismCheck> {
    for (src, dst) in map {
        if !g1.contains_vertex(src) {
            return Err(Error::UnknownVertex(src.clone()));
        }
        if !g2.contains_vertex(dst) {
            return Err(Error::UnknownVertex(dst.clone()));
        }
    }
    if let Some(missing) = g1.vertex_ids().find(|id| !map.contains_key(*id)) {
        return Err(Error::PartialMap(missing.clone()));
    }

    let mut violations = Vec::new();
    if kind.is_bijective() {
        let mut seen = BTreeSet::new();
        for dst in map.values() {
            if !seen.insert(dst) {
                violations.push(MorphismViolation::NotInjective { image: dst.clone() });
            }
        }
        for id in g2.vertex_ids() {
            if !seen.contains(id) {
                violations.push(MorphismViolation::NotSurjective { vertex: id.clone() });
            }
        }
    }

    for (src, d1) in g1.vertices() {
        let image = &map[src];
        let d2 = g2.vertex(image).expect("checked above");
        if !kind.vertex_ok(d1, d2) {
            violations.push(MorphismViolation::Vertex {
                vertex: src.clone(),
                image: image.clone(),
                source: d1,
                target: d2,
            });
        }
    }

    let pairs: Vec<_> = if kind.checks_all_pairs() {
        g1.pairs()
    } else {
        g1.edges().map(|(k, _)| k.clone()).collect()
    };
    for key in pairs {
        let q1 = g1.edge_by_key(&key).unwrap_or(PfDegree::ZERO);
        let (gu, gv) = (&map[key.lo()], &map[key.hi()]);
        let q2 = g2.edge_or_zero(gu, gv);
        if !kind.pair_ok(q1, q2) {
            violations.push(MorphismViolation::Pair {
                u: key.lo().clone(),
                v: key.hi().clone(),
                image_u: gu.clone(),
                image_v: gv.clone(),
                source: q1,
                target: q2,
            });
        }
    }

    Ok(MorphismCheck {
        ok: violations.is_empty(),
        violations,
    })
}

/// Inverse of a bijective map.
pub fn invert(map: &Mapping) -> Mapping {
    map.iter().map(|(k, v)| (v.clone(), k.clone())).collect()
}

/// `second ∘ first`. Sources of `first` whose image is missing from `second`
/// are dropped.
pub fn compose(first: &Mapping, second: &Mapping) -> Mapping {
    first
        .iter()
        .filter_map(|(k, mid)| second.get(mid).map(|v| (k.clone(), v.clone())))
        .collect()
}
