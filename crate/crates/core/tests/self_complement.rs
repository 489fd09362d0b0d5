mod common;

use common::*;
use pfg_core::algebra::complement;
use pfg_core::class::{
    classify, half_strong_construction, is_self_complementary, strong_sum_identity, sum_identity,
    SelfComplementVariant,
};
use pfg_core::{PfDegree, PfGraph, VertexId};
use proptest::prelude::*;

fn path_at_full_bound() -> PfGraph {
    PfGraph::build(
        &[("a", 0.6, 0.4), ("b", 0.6, 0.4), ("c", 0.6, 0.4), ("d", 0.6, 0.4)],
        &[("a", "b", 0.6, 0.4), ("b", "c", 0.6, 0.4), ("c", "d", 0.6, 0.4)],
    )
    .unwrap()
}

/// Sums match the self-complementary profile, but every vertex degree is
/// distinct, so only the identity can be an isomorphism and it fails on ab.
fn balanced_triangle() -> PfGraph {
    PfGraph::build(
        &[("a", 0.5, 0.6), ("b", 0.6, 0.5), ("c", 0.3, 0.7)],
        &[("a", "b", 0.3, 0.4), ("a", "c", 0.15, 0.3), ("b", "c", 0.1, 0.3)],
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn half_strong_graphs_are_self_complementary(seed in any::<u64>(), n in 1usize..7) {
        let vertices: Vec<(VertexId, PfDegree)> = random(seed, n, 0.0, "general")
            .vertices()
            .map(|(k, d)| (k.clone(), d))
            .collect();
        let g = half_strong_construction(vertices).unwrap();
        prop_assert!(g.is_valid());
        prop_assert!(complement(&g).unwrap().approx_eq(&g));
        let r = is_self_complementary(&g, SelfComplementVariant::General).unwrap();
        prop_assert!(r.self_complementary);
        prop_assert!(sum_identity(&g).holds());
    }

    #[test]
    fn self_complementary_graphs_satisfy_the_sum_identity(seed in any::<u64>(), n in 1usize..5, steps in 1u32..=2) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = grid_graph(&mut rng, n, steps);
        let r = is_self_complementary(&g, SelfComplementVariant::General).unwrap();
        if r.self_complementary {
            prop_assert!(sum_identity(&g).holds());
        }
    }
}

#[test]
fn sums_do_not_imply_self_complementarity() {
    let g = balanced_triangle();
    assert!(g.is_valid());
    let s = sum_identity(&g);
    assert!((s.lhs_mu - 0.55).abs() < 1e-9 && (s.rhs_mu - 0.55).abs() < 1e-9);
    assert!((s.lhs_nu - 1.0).abs() < 1e-9 && (s.rhs_nu - 1.0).abs() < 1e-9);
    assert!(s.holds());
    assert!(!is_self_complementary(&g, SelfComplementVariant::General).unwrap().self_complementary);
}

#[test]
fn self_complementary_without_half_strong_edges() {
    let g = path_at_full_bound();
    let r = is_self_complementary(&g, SelfComplementVariant::General).unwrap();
    assert!(r.self_complementary);
    let (k, q) = g.edges().next().unwrap();
    let b = g.bound(k.lo(), k.hi());
    assert!((q.mu - 0.5 * b.mu).abs() > 0.1);
    assert!(sum_identity(&g).holds());
}

/// The strong path above is also isomorphic to its strong complement; its
/// edge sums are half the pair-bound sums, not equal to them.
#[test]
fn strong_self_complementary_path_meets_the_halved_sums_only() {
    let g = path_at_full_bound();
    assert!(classify(&g).is_strong);
    let r = is_self_complementary(&g, SelfComplementVariant::Strong).unwrap();
    assert!(r.self_complementary);
    let strong = strong_sum_identity(&g);
    assert!((strong.lhs_mu - 1.8).abs() < 1e-9 && (strong.rhs_mu - 3.6).abs() < 1e-9);
    assert!(!strong.holds());
    assert!(sum_identity(&g).holds());
}

/// A strong graph covering all pairs at the bound has an edgeless strong
/// complement, so it is not self-complementary once it has an edge.
#[test]
fn complete_graphs_are_not_self_complementary() {
    for seed in 0..30 {
        let g = random(seed, 3, 1.0, "complete");
        for variant in [SelfComplementVariant::Strong, SelfComplementVariant::Complete] {
            assert!(!is_self_complementary(&g, variant).unwrap().self_complementary);
        }
    }
}
