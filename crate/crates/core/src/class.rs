//! Strength and completeness predicates, sum identities, and self-complementarity.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{complement, complete_complement, strong_complement};
use crate::degree::PfDegree;
use crate::error::{Error, Result};
use crate::graph::{PairKey, PfGraph, VertexId};
use crate::morph::{find_morphism_with, Mapping, MorphismKind, SearchConfig};
use crate::tolerance::{approx_eq, strictly_lt};

/// One offending pair for each flag that came out false.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_strong: Option<PairKey>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_strong: Option<PairKey>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong: Option<PairKey>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<PairKey>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_mu_strong: Option<PairKey>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_nu_strong: Option<PairKey>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub is_mu_strong: bool,
    pub is_nu_strong: bool,
    pub is_strong: bool,
    pub is_complete: bool,
    pub is_complete_mu_strong: bool,
    pub is_complete_nu_strong: bool,
    pub witnesses: Witnesses,
}

fn first_failing<'a>(
    mut pairs: impl Iterator<Item = (&'a PairKey, PfDegree)>,
    g: &PfGraph,
    ok: impl Fn(PfDegree, PfDegree) -> bool,
) -> Option<PairKey> {
    pairs
        .find(|(key, q)| !ok(*q, g.bound(key.lo(), key.hi())))
        .map(|(key, _)| key.clone())
}

/// Classify `g`. Equalities hold within tolerance; the strict inequalities of
/// the complete-μ/ν variants need a gap larger than the tolerance.
pub fn classify(g: &PfGraph) -> Classification {
    let mu_eq = |q: PfDegree, b: PfDegree| approx_eq(q.mu, b.mu);
    let nu_eq = |q: PfDegree, b: PfDegree| approx_eq(q.nu, b.nu);

    let mu_strong = first_failing(g.edges(), g, mu_eq);
    let nu_strong = first_failing(g.edges(), g, nu_eq);
    let strong = first_failing(g.edges(), g, |q, b| mu_eq(q, b) && nu_eq(q, b));

    let pairs = g.pairs();
    let all = || pairs.iter().map(|k| (k, g.edge_by_key(k).unwrap_or(PfDegree::ZERO)));
    let complete = first_failing(all(), g, |q, b| mu_eq(q, b) && nu_eq(q, b));
    let complete_mu = first_failing(all(), g, |q, b| mu_eq(q, b) && strictly_lt(q.nu, b.nu));
    let complete_nu = first_failing(all(), g, |q, b| nu_eq(q, b) && strictly_lt(q.mu, b.mu));

    Classification {
        is_mu_strong: mu_strong.is_none(),
        is_nu_strong: nu_strong.is_none(),
        is_strong: strong.is_none(),
        is_complete: complete.is_none(),
        is_complete_mu_strong: complete_mu.is_none(),
        is_complete_nu_strong: complete_nu.is_none(),
        witnesses: Witnesses {
            mu_strong,
            nu_strong,
            strong,
            complete,
            complete_mu_strong: complete_mu,
            complete_nu_strong: complete_nu,
        },
    }
}

/// Both sides of the edge-sum identities, summed over unordered vertex pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SumIdentityReport {
    pub lhs_mu: f64,
    pub rhs_mu: f64,
    pub lhs_nu: f64,
    pub rhs_nu: f64,
    pub holds_mu: bool,
    pub holds_nu: bool,
}

impl SumIdentityReport {
    pub fn holds(&self) -> bool {
        self.holds_mu && self.holds_nu
    }
}

fn sums(g: &PfGraph, factor: f64) -> SumIdentityReport {
    let (mut lhs_mu, mut lhs_nu, mut bound_mu, mut bound_nu) = (0.0, 0.0, 0.0, 0.0);
    for key in g.pairs() {
        let q = g.edge_by_key(&key).unwrap_or(PfDegree::ZERO);
        let b = g.bound(key.lo(), key.hi());
        lhs_mu += q.mu;
        lhs_nu += q.nu;
        bound_mu += b.mu;
        bound_nu += b.nu;
    }
    let rhs_mu = factor * bound_mu;
    let rhs_nu = factor * bound_nu;
    SumIdentityReport {
        lhs_mu,
        rhs_mu,
        lhs_nu,
        rhs_nu,
        holds_mu: approx_eq(lhs_mu, rhs_mu),
        holds_nu: approx_eq(lhs_nu, rhs_nu),
    }
}

/// `Σ μ(uv) = ½ Σ min(μ(u), μ(v))` and `Σ ν(uv) = ½ Σ max(ν(u), ν(v))`;
/// a necessary condition for self-complementarity.
pub fn sum_identity(g: &PfGraph) -> SumIdentityReport {
    sums(g, 0.5)
}

/// The same sums without the ½ factor; necessary for a strong graph to be
/// isomorphic to its strong complement.
pub fn strong_sum_identity(g: &PfGraph) -> SumIdentityReport {
    sums(g, 1.0)
}

/// Which complement a self-complementarity check compares against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SelfComplementVariant {
    General,
    Strong,
    Complete,
}

impl SelfComplementVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            SelfComplementVariant::General => "general",
            SelfComplementVariant::Strong => "strong",
            SelfComplementVariant::Complete => "complete",
        }
    }

    /// The complement this variant compares against.
    pub fn complement_of(self, g: &PfGraph) -> Result<PfGraph> {
        match self {
            SelfComplementVariant::General => complement(g),
            SelfComplementVariant::Strong => strong_complement(g, false),
            SelfComplementVariant::Complete => complete_complement(g, false),
        }
    }
}

impl fmt::Display for SelfComplementVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SelfComplementVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(SelfComplementVariant::General),
            "strong" => Ok(SelfComplementVariant::Strong),
            "complete" => Ok(SelfComplementVariant::Complete),
            _ => Err(Error::UnknownName {
                what: "complement variant",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelfComplementReport {
    pub variant: SelfComplementVariant,
    pub self_complementary: bool,
    /// Isomorphism from the graph onto its complement, when one exists.
    pub witness: Option<Mapping>,
    pub search_space: u64,
}

/// Whether `g` is isomorphic to its own complement under `variant`.
pub fn is_self_complementary(g: &PfGraph, variant: SelfComplementVariant) -> Result<SelfComplementReport> {
    is_self_complementary_with(g, variant, &SearchConfig::default())
}

pub fn is_self_complementary_with(
    g: &PfGraph,
    variant: SelfComplementVariant,
    cfg: &SearchConfig,
) -> Result<SelfComplementReport> {
    let comp = variant.complement_of(g)?;
    let report = find_morphism_with(g, &comp, MorphismKind::Isomorphism, cfg)?;
    Ok(SelfComplementReport {
        variant,
        self_complementary: report.found,
        witness: report.witness,
        search_space: report.search_space,
    })
}

/// Graph on the given vertices with every pair carrying
/// `(½ min(μ(u), μ(v)), ½ max(ν(u), ν(v)))`. Such a graph equals its own
/// complement, so the identity is a witness of self-complementarity.
pub fn half_strong_construction<I>(vertices: I) -> Result<PfGraph>
where
    I: IntoIterator<Item = (VertexId, PfDegree)>,
{
    let mut g = PfGraph::new();
    for (id, d) in vertices {
        if !d.is_pythagorean() {
            return Err(Error::InvalidDegree { mu: d.mu, nu: d.nu });
        }
        g.add_vertex(id, d)?;
    }
    for key in g.pairs() {
        let b = g.bound(key.lo(), key.hi());
        g.set_pair(key, PfDegree::raw(0.5 * b.mu, 0.5 * b.nu));
    }
    Ok(g)
}

/// Convenience wrapper for [`half_strong_construction`] over a map.
pub fn half_strong_from_map(p: &BTreeMap<VertexId, PfDegree>) -> Result<PfGraph> {
    half_strong_construction(p.iter().map(|(k, d)| (k.clone(), *d)))
}
