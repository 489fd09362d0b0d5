mod common;

use common::*;
use pfg_core::algebra::{complete_complement, strong_complement};
use pfg_core::morph::{
    compose, find_morphism, find_morphism_using, invert, verify_morphism, ExhaustiveSearch,
    MorphismKind, PrunedSearch, SearchConfig,
};
use pfg_core::{PfDegree, PfGraph, VertexId};
use proptest::prelude::*;
use rand::SeedableRng;

const KINDS: [MorphismKind; 4] = MorphismKind::ALL;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pruned_agrees_with_exhaustive_on_grid_graphs(seed in any::<u64>(), n1 in 0usize..5, n2 in 0usize..5, steps in 1u32..=4) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g1 = grid_graph(&mut rng, n1, steps);
        // half of the time compare against a shuffled copy so that witnesses exist
        let g2 = if seed % 2 == 0 { shuffled_copy(&g1, seed, "y").0 } else { grid_graph(&mut rng, n2, steps) };
        let cfg = SearchConfig::default();
        for kind in KINDS {
            let a = find_morphism_using(&PrunedSearch, &g1, &g2, kind, &cfg).unwrap();
            let b = find_morphism_using(&ExhaustiveSearch, &g1, &g2, kind, &cfg).unwrap();
            prop_assert_eq!(a.found, b.found, "{:?}", kind);
            prop_assert_eq!(&a.witness, &b.witness, "{:?}", kind);
            if let Some(w) = &a.witness {
                prop_assert!(verify_morphism(&g1, &g2, kind, w).unwrap().ok);
            }
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence(seed in any::<u64>(), n in 0usize..7, p in 0.0f64..=1.0) {
        let g1 = random(seed, n, p, "general");
        let (g2, _) = shuffled_copy(&g1, seed ^ 3, "m");
        let (g3, _) = shuffled_copy(&g2, seed ^ 5, "t");

        let refl = find_morphism(&g1, &g1, MorphismKind::Isomorphism).unwrap();
        prop_assert!(refl.found);

        let w = find_morphism(&g1, &g2, MorphismKind::Isomorphism).unwrap().witness.unwrap();
        let v = find_morphism(&g2, &g3, MorphismKind::Isomorphism).unwrap().witness.unwrap();
        prop_assert!(verify_morphism(&g2, &g1, MorphismKind::Isomorphism, &invert(&w)).unwrap().ok);
        prop_assert!(verify_morphism(&g1, &g3, MorphismKind::Isomorphism, &compose(&w, &v)).unwrap().ok);
    }

    #[test]
    fn strong_complement_transfers_isomorphisms(seed in any::<u64>(), n in 1usize..6, p in 0.0f64..=1.0, copy in any::<bool>()) {
        let g1 = random(seed, n, p, "strong");
        let g2 = if copy { shuffled_copy(&g1, seed, "s").0 } else { random(seed ^ 11, n, p, "strong") };
        let c1 = strong_complement(&g1, false).unwrap();
        let c2 = strong_complement(&g2, false).unwrap();
        let direct = find_morphism(&g1, &g2, MorphismKind::Isomorphism).unwrap();
        let through = find_morphism(&c1, &c2, MorphismKind::Isomorphism).unwrap();
        prop_assert_eq!(direct.found, through.found);
        if let Some(w) = &direct.witness {
            prop_assert!(verify_morphism(&c1, &c2, MorphismKind::Isomorphism, w).unwrap().ok);
        }
    }

    #[test]
    fn weak_isomorphism_reverses_through_strong_complements(seed in any::<u64>(), n in 1usize..6, p in 0.0f64..=1.0) {
        // drop edges from a strong graph to get a weak (edge-dominated) copy
        let g2 = random(seed, n, p, "strong");
        let keep: Vec<_> = g2.edges().filter(|(k, _)| !(k.lo().as_str().len() + k.hi().as_str().len() + seed as usize).is_multiple_of(3)).map(|(k, d)| (k.clone(), d)).collect();
        let mut g1 = g2.without_edges();
        for (k, d) in keep {
            g1.set_edge(k.lo().clone(), k.hi().clone(), d).unwrap();
        }
        let (g2, _) = shuffled_copy(&g2, seed, "w");
        let r = find_morphism(&g1, &g2, MorphismKind::WeakIsomorphism).unwrap();
        prop_assert!(r.found);
        let w = r.witness.unwrap();
        let c1 = strong_complement(&g1, false).unwrap();
        let c2 = strong_complement(&g2, false).unwrap();
        prop_assert!(verify_morphism(&c2, &c1, MorphismKind::WeakIsomorphism, &invert(&w)).unwrap().ok);
    }

    #[test]
    fn complete_complement_transfers_isomorphisms(seed in any::<u64>(), n in 1usize..6, copy in any::<bool>()) {
        let g1 = random(seed, n, 1.0, "complete");
        let g2 = if copy { shuffled_copy(&g1, seed, "k").0 } else { random(seed ^ 13, n, 1.0, "complete") };
        let c1 = complete_complement(&g1, false).unwrap();
        let c2 = complete_complement(&g2, false).unwrap();
        let direct = find_morphism(&g1, &g2, MorphismKind::Isomorphism).unwrap();
        prop_assert_eq!(direct.found, find_morphism(&c1, &c2, MorphismKind::Isomorphism).unwrap().found);
    }
}

fn v(s: &str) -> VertexId {
    VertexId::from(s)
}

/// Weak isomorphisms in both directions with positive edge memberships force
/// equal edge sums, hence an isomorphism.
#[test]
fn mutual_weak_isomorphism_implies_isomorphism_on_positive_edges() {
    for seed in 0..60 {
        let g1 = random(seed, 5, 0.6, "general");
        let (g2, _) = shuffled_copy(&g1, seed, "q");
        let there = find_morphism(&g1, &g2, MorphismKind::WeakIsomorphism).unwrap();
        let back = find_morphism(&g2, &g1, MorphismKind::WeakIsomorphism).unwrap();
        assert!(there.found && back.found);
        assert!(find_morphism(&g1, &g2, MorphismKind::Isomorphism).unwrap().found);
    }
}

/// An edge with zero membership is invisible to the weak conditions against an
/// absent edge, so two non-isomorphic graphs can be weakly isomorphic both ways.
#[test]
fn mutual_weak_isomorphism_without_isomorphism() {
    let g1 = PfGraph::build(&[("a", 0.5, 0.5), ("b", 0.5, 0.5)], &[("a", "b", 0.0, 0.4)]).unwrap();
    let g2 = PfGraph::build(&[("a", 0.5, 0.5), ("b", 0.5, 0.5)], &[]).unwrap();
    assert!(find_morphism(&g1, &g2, MorphismKind::WeakIsomorphism).unwrap().found);
    assert!(find_morphism(&g2, &g1, MorphismKind::WeakIsomorphism).unwrap().found);
    assert!(!find_morphism(&g1, &g2, MorphismKind::Isomorphism).unwrap().found);
}

/// A co-weak isomorphism between strong graphs whose strong complements admit
/// no homomorphism in either direction.
#[test]
fn coweak_isomorphism_without_complement_homomorphism() {
    let g1 = PfGraph::build(&[("a", 0.4, 0.6), ("b", 0.4, 0.6)], &[]).unwrap();
    let g2 = PfGraph::build(&[("x", 0.5, 0.5), ("y", 0.5, 0.5)], &[("x", "y", 0.5, 0.5)]).unwrap();
    assert!(find_morphism(&g1, &g2, MorphismKind::CoweakIsomorphism).unwrap().found);
    let c1 = strong_complement(&g1, false).unwrap();
    let c2 = strong_complement(&g2, false).unwrap();
    assert_eq!(c1.edge(&v("a"), &v("b")), Some(PfDegree::raw(0.4, 0.6)));
    assert_eq!(c2.edge_count(), 0);
    assert!(!find_morphism(&c1, &c2, MorphismKind::Homomorphism).unwrap().found);
    assert!(!find_morphism(&c2, &c1, MorphismKind::Homomorphism).unwrap().found);
}

#[test]
fn coweak_isomorphism_of_copies_transfers() {
    for seed in 0..40 {
        let g1 = random(seed, 5, 0.5, "strong");
        let (g2, _) = shuffled_copy(&g1, seed, "c");
        let r = find_morphism(&g1, &g2, MorphismKind::CoweakIsomorphism).unwrap();
        assert!(r.found);
        let c1 = strong_complement(&g1, false).unwrap();
        let c2 = strong_complement(&g2, false).unwrap();
        let w = r.witness.unwrap();
        assert!(verify_morphism(&c1, &c2, MorphismKind::Homomorphism, &w).unwrap().ok);
    }
}

#[test]
fn cap_is_configurable() {
    let g = random(1, 10, 0.3, "general");
    assert!(find_morphism(&g, &g, MorphismKind::Isomorphism).is_err());
    let r = pfg_core::morph::find_morphism_with(&g, &g, MorphismKind::Isomorphism, &SearchConfig { cap: 10 }).unwrap();
    assert!(r.found);
}
