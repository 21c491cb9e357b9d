use proptest::prelude::*;

use mlcore::community::{sigma, theta};
use mlcore::decomposition::{decompose_dfs_with_order, decompose_hybrid, LayerOrder};
use mlcore::densest::densest_bruteforce;
use mlcore::generate::gnp;
use mlcore::innermost::InnermostSearch;
use mlcore::quasiclique::{is_quasi_clique, prune_graph, MiningParams};
use mlcore::{cores_path, maximal_vector, peel_core, CorenessVector, MultilayerGraph, VertexSet};

fn graph(max_n: usize, max_layers: usize) -> impl Strategy<Value = MultilayerGraph> {
    (3..max_n, 1..=max_layers, 0.05f64..0.6, any::<u64>()).prop_map(|(n, l, p, seed)| gnp(n, l, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn peeling_any_superset_gives_the_same_core(g in graph(20, 4), extra in any::<u64>(), raw in proptest::collection::vec(0u32..4, 4)) {
        let k = CorenessVector::new(raw[..g.layer_count()].to_vec());
        let core = peel_core(&g, &g.vertices(), &k).unwrap();
        // a superset of the core built from a pseudo-random subset of the rest
        let superset: VertexSet = g.vertices().iter().filter(|&u| core.contains(u) || (extra >> (u % 64)) & 1 == 1).collect();
        prop_assert_eq!(peel_core(&g, &superset, &k).unwrap(), core);
    }

    #[test]
    fn path_cores_shrink_and_match_peeling(g in graph(20, 4), layer in 0usize..4) {
        let layer = layer % g.layer_count();
        let root = CorenessVector::zeros(g.layer_count());
        let path = cores_path(&g, &g.vertices(), &root, layer).unwrap();
        let mut previous = g.vertices();
        for (k, core) in path {
            prop_assert!(core.is_subset(&previous));
            prop_assert_eq!(&peel_core(&g, &g.vertices(), &k).unwrap(), &core);
            previous = core;
        }
    }

    #[test]
    fn sigma_of_each_core_equals_theta(g in graph(16, 4), beta in 0.1f64..5.0) {
        for core in decompose_hybrid(&g).cores() {
            prop_assert_eq!(maximal_vector(&g, &core.vertices).unwrap(), core.vector.clone());
            let t = theta(&g, &core.vertices, beta).unwrap().0;
            let s = sigma(&core.vector, beta);
            prop_assert!((t - s).abs() <= 1e-12 * t.abs().max(1.0));
        }
    }

    #[test]
    fn quasi_clique_predicate_is_monotone_in_gamma(g in graph(12, 2), mask in any::<u16>(), a in 0.01f64..1.0, b in 0.01f64..1.0) {
        let set: VertexSet = g.vertices().iter().filter(|&u| mask >> (u % 16) & 1 == 1).collect();
        prop_assume!(!set.is_empty());
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        for layer in 0..g.layer_count() {
            prop_assert!(!is_quasi_clique(&g, &set, layer, hi) || is_quasi_clique(&g, &set, layer, lo));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dfs_result_is_independent_of_layer_order(g in graph(25, 4), seed in any::<u64>()) {
        let reference = decompose_hybrid(&g).to_map();
        for order in [LayerOrder::Random(seed), LayerOrder::DensityAscending, LayerOrder::DensityDescending] {
            prop_assert_eq!(&decompose_dfs_with_order(&g, &order).to_map(), &reference);
        }
    }

    #[test]
    fn innermost_thresholds_never_decrease(g in graph(25, 4)) {
        let (_, context) = InnermostSearch::by_density(&g).run();
        prop_assert!(context.monotone());
    }

    #[test]
    fn pruned_set_shrinks_with_stricter_parameters(g in graph(20, 4), gamma in 0.3f64..=1.0) {
        let d = decompose_hybrid(&g);
        let l = g.layer_count();
        let mut previous: Option<VertexSet> = None;
        for min_size in 2..7 {
            let kept = prune_graph(&g, &d, &MiningParams::uniform(gamma, l, 0.5, min_size).unwrap());
            if let Some(p) = &previous {
                prop_assert!(kept.is_subset(p));
            }
            previous = Some(kept);
        }
        let mut previous: Option<VertexSet> = None;
        for min_sup in [0.25, 0.5, 0.75, 1.0] {
            let kept = prune_graph(&g, &d, &MiningParams::uniform(gamma, l, min_sup, 3).unwrap());
            if let Some(p) = &previous {
                prop_assert!(kept.is_subset(p));
            }
            previous = Some(kept);
        }
    }

    #[test]
    fn exhaustive_densest_trends_in_beta(g in graph(11, 4)) {
        let mut last: Option<(usize, f64)> = None;
        for beta in [0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
            let r = densest_bruteforce(&g, beta).unwrap();
            let min_density = r.best_layers
                .iter()
                .map(|&l| g.induced_edge_count(&r.vertices, l) as f64 / r.vertices.len() as f64)
                .fold(f64::INFINITY, f64::min);
            if let Some((layers, density)) = last {
                prop_assert!(r.best_layers.len() >= layers, "beta {}: {} layers after {}", beta, r.best_layers.len(), layers);
                prop_assert!(min_density <= density + 1e-12);
            }
            last = Some((r.best_layers.len(), min_density));
        }
    }
}
