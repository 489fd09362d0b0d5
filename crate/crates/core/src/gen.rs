//! Seeded random graphs.
//!
//! Vertices are labelled `v0, v1, …`. A vertex draws `μ` uniformly from
//! `[0, 1]` and then `ν` uniformly from `[0, √(1 − μ²)]`; edges are chosen
//! per family. All randomness comes from a ChaCha8 stream seeded with
//! [`GenConfig::seed`], so equal configs give equal graphs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degree::PfDegree;
use crate::error::{Error, Result};
use crate::graph::{PairKey, PfGraph, VertexId};

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub n_vertices: usize,
    pub edge_probability: f64,
    /// Registered family name: `general`, `strong`, `complete`, `half_strong`.
    pub family: String,
    /// Round drawn degrees to this many decimal places.
    pub quantize: Option<u32>,
}

impl GenConfig {
    pub fn new(seed: u64, n_vertices: usize, edge_probability: f64, family: &str) -> Self {
        GenConfig {
            seed,
            n_vertices,
            edge_probability,
            family: family.to_string(),
            quantize: None,
        }
    }

    pub fn quantized(mut self, places: u32) -> Self {
        self.quantize = Some(places);
        self
    }
}

/// Shared state handed to a family while it places edges.
pub struct Draw<'a> {
    pub rng: &'a mut ChaCha8Rng,
    pub edge_probability: f64,
    pub quantize: Option<u32>,
}

impl Draw<'_> {
    /// Bernoulli trial with the configured edge probability.
    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(self.edge_probability)
    }

    /// Uniform in `[0, hi]`, rounded when quantizing.
    pub fn uniform(&mut self, hi: f64) -> f64 {
        let x = if hi > 0.0 { self.rng.gen_range(0.0..=hi) } else { 0.0 };
        self.round(x)
    }

    pub fn round(&self, x: f64) -> f64 {
        match self.quantize {
            Some(k) => quantize(x, k),
            None => x,
        }
    }
}

/// Round to `places` decimals.
pub fn quantize(x: f64, places: u32) -> f64 {
    let scale = 10f64.powi(places as i32);
    (x * scale).round() / scale
}

fn floor_to(x: f64, places: u32) -> f64 {
    let scale = 10f64.powi(places as i32);
    (x * scale).floor() / scale
}

/// A family of random graphs: decides which pairs get edges and with which
/// degrees, given the vertex degrees.
pub trait GraphFamily: Send + Sync {
    fn name(&self) -> &'static str;

    fn place_edges(&self, g: &mut PfGraph, draw: &mut Draw<'_>);
}

fn pairs_with_bounds(g: &PfGraph) -> Vec<(PairKey, PfDegree)> {
    g.pairs()
        .into_iter()
        .map(|k| {
            let b = g.bound(k.lo(), k.hi());
            (k, b)
        })
        .collect()
}

/// Each pair independently becomes an edge with the configured probability;
/// `μ` is uniform up to the `μ` bound, `ν` uniform up to the `ν` bound.
pub struct GeneralFamily;

impl GraphFamily for GeneralFamily {
    fn name(&self) -> &'static str {
        "general"
    }

    fn place_edges(&self, g: &mut PfGraph, draw: &mut Draw<'_>) {
        for (key, b) in pairs_with_bounds(g) {
            if draw.coin() {
                let mu = draw.uniform(b.mu);
                let nu = draw.uniform(b.nu);
                g.set_pair(key, PfDegree::raw(mu, nu));
            }
        }
    }
}

/// Like [`GeneralFamily`] but every edge sits exactly at its bound.
pub struct StrongFamily;

impl GraphFamily for StrongFamily {
    fn name(&self) -> &'static str {
        "strong"
    }

    fn place_edges(&self, g: &mut PfGraph, draw: &mut Draw<'_>) {
        for (key, b) in pairs_with_bounds(g) {
            if draw.coin() {
                g.set_pair(key, b);
            }
        }
    }
}

/// Every pair at its bound; ignores the edge probability.
pub struct CompleteFamily;

impl GraphFamily for CompleteFamily {
    fn name(&self) -> &'static str {
        "complete"
    }

    fn place_edges(&self, g: &mut PfGraph, _draw: &mut Draw<'_>) {
        for (key, b) in pairs_with_bounds(g) {
            g.set_pair(key, b);
        }
    }
}

/// Every pair at half its bound; ignores the edge probability. Halves are not
/// rounded, so the graph equals its own complement exactly.
pub struct HalfStrongFamily;

impl GraphFamily for HalfStrongFamily {
    fn name(&self) -> &'static str {
        "half_strong"
    }

    fn place_edges(&self, g: &mut PfGraph, _draw: &mut Draw<'_>) {
        for (key, b) in pairs_with_bounds(g) {
            g.set_pair(key, PfDegree::raw(0.5 * b.mu, 0.5 * b.nu));
        }
    }
}

#[derive(Default)]
pub struct FamilyRegistry {
    families: BTreeMap<&'static str, Box<dyn GraphFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(GeneralFamily));
        r.register(Box::new(StrongFamily));
        r.register(Box::new(CompleteFamily));
        r.register(Box::new(HalfStrongFamily));
        r
    }

    pub fn register(&mut self, f: Box<dyn GraphFamily>) {
        self.families.insert(f.name(), f);
    }

    pub fn get(&self, name: &str) -> Result<&dyn GraphFamily> {
        self.families
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownName {
                what: "graph family",
                name: name.to_string(),
            })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.keys().copied()
    }
}

fn draw_vertex(draw: &mut Draw<'_>) -> PfDegree {
    let mu = draw.uniform(1.0);
    let room = (1.0 - mu * mu).max(0.0).sqrt();
    for _ in 0..16 {
        let nu = draw.uniform(room);
        let d = PfDegree::raw(mu, nu);
        if d.is_pythagorean() {
            return d;
        }
    }
    // rounding kept pushing ν past the circle; round down instead
    let places = draw.quantize.unwrap_or(0);
    PfDegree::raw(mu, floor_to(room, places))
}

/// Generate a graph with the built-in families.
pub fn generate(cfg: &GenConfig) -> Result<PfGraph> {
    generate_with(&FamilyRegistry::builtin(), cfg)
}

pub fn generate_with(registry: &FamilyRegistry, cfg: &GenConfig) -> Result<PfGraph> {
    let family = registry.get(&cfg.family)?;
    if !(0.0..=1.0).contains(&cfg.edge_probability) {
        return Err(Error::InvalidConfig(format!(
            "edge probability {} is outside [0, 1]",
            cfg.edge_probability
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut draw = Draw {
        rng: &mut rng,
        edge_probability: cfg.edge_probability,
        quantize: cfg.quantize,
    };
    let mut g = PfGraph::new();
    for i in 0..cfg.n_vertices {
        let id = VertexId::new(format!("v{i}"))?;
        let d = draw_vertex(&mut draw);
        g.add_vertex(id, d)?;
    }
    family.place_edges(&mut g, &mut draw);
    Ok(g)
}
