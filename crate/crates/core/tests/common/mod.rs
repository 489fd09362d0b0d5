//! Test helpers: random graphs and direct re-implementations of the
//! operations, written pair-by-pair from the definitions so they share no code
//! with the library's edge-building loops.
#![allow(dead_code)]

use pfg_core::algebra::product_label;
use pfg_core::gen::{generate, GenConfig};
use pfg_core::{PfDegree, PfGraph, VertexId};

pub fn random(seed: u64, n: usize, p: f64, family: &str) -> PfGraph {
    generate(&GenConfig::new(seed, n, p, family)).unwrap()
}

/// Two graphs with disjoint labels (`L…` and `R…`).
pub fn disjoint_pair(seed: u64, n1: usize, n2: usize, p: f64, family: &str) -> (PfGraph, PfGraph) {
    let g1 = random(seed, n1, p, family).prefixed("L");
    let g2 = random(seed.wrapping_add(0x9e37_79b9), n2, p, family).prefixed("R");
    (g1, g2)
}

fn lo_hi(a: PfDegree, b: PfDegree) -> PfDegree {
    PfDegree::raw(a.mu.min(b.mu), a.nu.max(b.nu))
}

fn hi_lo(a: PfDegree, b: PfDegree) -> PfDegree {
    PfDegree::raw(a.mu.max(b.mu), a.nu.min(b.nu))
}

fn ids(g: &PfGraph) -> Vec<VertexId> {
    g.vertex_ids().cloned().collect()
}

fn product_shell(g1: &PfGraph, g2: &PfGraph) -> (PfGraph, Vec<(VertexId, VertexId)>) {
    let mut out = PfGraph::new();
    let mut coords = Vec::new();
    for u in ids(g1) {
        for w in ids(g2) {
            let d = lo_hi(g1.vertex(&u).unwrap(), g2.vertex(&w).unwrap());
            out.add_vertex(product_label(&u, &w), d).unwrap();
            coords.push((u.clone(), w.clone()));
        }
    }
    (out, coords)
}

/// Cartesian product (`composite = false`) or composition (`true`) by case
/// analysis on every unordered pair of product vertices.
pub fn product_oracle(g1: &PfGraph, g2: &PfGraph, composite: bool) -> PfGraph {
    let (mut out, coords) = product_shell(g1, g2);
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            let (u1, u2) = &coords[i];
            let (v1, v2) = &coords[j];
            let degree = if u1 == v1 {
                g2.edge(u2, v2).map(|q| lo_hi(g1.vertex(u1).unwrap(), q))
            } else if u2 == v2 {
                g1.edge(u1, v1).map(|q| lo_hi(q, g2.vertex(u2).unwrap()))
            } else if composite {
                g1.edge(u1, v1).map(|q| {
                    let ends = lo_hi(g2.vertex(u2).unwrap(), g2.vertex(v2).unwrap());
                    lo_hi(ends, q)
                })
            } else {
                None
            };
            if let Some(d) = degree {
                out.add_edge(product_label(u1, u2), product_label(v1, v2), d).unwrap();
            }
        }
    }
    out
}

pub fn union_oracle(g1: &PfGraph, g2: &PfGraph) -> PfGraph {
    let mut all: Vec<VertexId> = ids(g1);
    for id in ids(g2) {
        if !all.contains(&id) {
            all.push(id);
        }
    }
    let mut out = PfGraph::new();
    for id in &all {
        let d = match (g1.vertex(id), g2.vertex(id)) {
            (Some(a), Some(b)) => hi_lo(a, b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        out.add_vertex(id.clone(), d).unwrap();
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let (u, v) = (&all[i], &all[j]);
            let d = match (g1.edge(u, v), g2.edge(u, v)) {
                (Some(a), Some(b)) => Some(hi_lo(a, b)),
                (Some(a), None) | (None, Some(a)) => Some(a),
                (None, None) => None,
            };
            if let Some(d) = d {
                out.add_edge(u.clone(), v.clone(), d).unwrap();
            }
        }
    }
    out
}

pub fn join_oracle(g1: &PfGraph, g2: &PfGraph) -> PfGraph {
    let mut out = union_oracle(g1, g2);
    for u in ids(g1) {
        for v in ids(g2) {
            let d = lo_hi(g1.vertex(&u).unwrap(), g2.vertex(&v).unwrap());
            out.add_edge(u.clone(), v, d).unwrap();
        }
    }
    out
}

pub fn complement_oracle(g: &PfGraph) -> PfGraph {
    let all = ids(g);
    let mut out = PfGraph::new();
    for id in &all {
        out.add_vertex(id.clone(), g.vertex(id).unwrap()).unwrap();
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let (u, v) = (&all[i], &all[j]);
            let du = g.vertex(u).unwrap();
            let dv = g.vertex(v).unwrap();
            let q = g.edge(u, v).unwrap_or(PfDegree::raw(0.0, 0.0));
            let min_mu = du.mu.min(dv.mu);
            let max_nu = du.nu.max(dv.nu);
            let mu = if q.mu == 0.0 { min_mu } else { min_mu - q.mu };
            let nu = if q.nu == 0.0 { max_nu } else { max_nu - q.nu };
            let mu = if mu.abs() < 1e-12 { 0.0 } else { mu };
            let nu = if nu.abs() < 1e-12 { 0.0 } else { nu };
            out.add_edge(u.clone(), v.clone(), PfDegree::raw(mu, nu)).unwrap();
        }
    }
    out
}

/// Direct strength check, independent of `classify`.
pub fn strong_oracle(g: &PfGraph) -> bool {
    g.edges().all(|(k, q)| {
        let a = g.vertex(k.lo()).unwrap();
        let b = g.vertex(k.hi()).unwrap();
        (q.mu - a.mu.min(b.mu)).abs() <= 1e-9 && (q.nu - a.nu.max(b.nu)).abs() <= 1e-9
    })
}

/// Direct completeness check: strong on every pair, absent pairs read (0, 0).
pub fn complete_oracle(g: &PfGraph) -> bool {
    let all = ids(g);
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let (a, b) = (g.vertex(&all[i]).unwrap(), g.vertex(&all[j]).unwrap());
            let q = g.edge(&all[i], &all[j]).unwrap_or(PfDegree::raw(0.0, 0.0));
            if (q.mu - a.mu.min(b.mu)).abs() > 1e-9 || (q.nu - a.nu.max(b.nu)).abs() > 1e-9 {
                return false;
            }
        }
    }
    true
}

/// Random graph with every degree on the `1/steps` grid. Edge degrees are
/// drawn from grid points under the bound, `(0, 0)` included.
pub fn grid_graph(rng: &mut impl rand::Rng, n: usize, steps: u32) -> PfGraph {
    let s = steps as f64;
    let mut g = PfGraph::new();
    for i in 0..n {
        let mu = rng.gen_range(0..=steps) as f64 / s;
        let room = ((1.0 - mu * mu).max(0.0).sqrt() * s + 1e-9).floor() as u32;
        let nu = rng.gen_range(0..=room) as f64 / s;
        g.add_vertex(VertexId::new(format!("x{i}")).unwrap(), PfDegree::raw(mu, nu)).unwrap();
    }
    for key in g.pairs() {
        let b = g.bound(key.lo(), key.hi());
        let mu = rng.gen_range(0..=(b.mu * s).round() as u32) as f64 / s;
        let nu = rng.gen_range(0..=(b.nu * s).round() as u32) as f64 / s;
        g.set_edge(key.lo().clone(), key.hi().clone(), PfDegree::raw(mu, nu)).unwrap();
    }
    g
}

/// Relabel `g` through a seeded random permutation of its labels, renaming
/// into `prefix0, prefix1, …` order so that the result's label order differs
/// from the source's.
pub fn shuffled_copy(g: &PfGraph, seed: u64, prefix: &str) -> (PfGraph, pfg_core::morph::Mapping) {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut slots: Vec<usize> = (0..g.vertex_count()).collect();
    slots.shuffle(&mut rng);
    let map: pfg_core::morph::Mapping = g
        .vertex_ids()
        .zip(slots)
        .map(|(id, s)| (id.clone(), VertexId::new(format!("{prefix}{s}")).unwrap()))
        .collect();
    let copy = g.relabel(|id| Ok(map[id].clone())).unwrap();
    (copy, map)
}
