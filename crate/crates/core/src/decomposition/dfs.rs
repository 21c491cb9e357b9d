use std::collections::HashMap;
use std::rc::Rc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CoreCollector, CoreDecomposition, TraversalStats};
use crate::graph::{Layer, MultilayerGraph, VertexSet};
use crate::peel::cores_path_while;
use crate::vector::CorenessVector;

/// Order in which the depth-first engine retires layers. The result never
/// depends on it; running time may.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LayerOrder {
    Random(u64),
    DensityAscending,
    DensityDescending,
    Given(Vec<Layer>),
}

impl LayerOrder {
    pub(crate) fn resolve(&self, g: &MultilayerGraph) -> Vec<Layer> {
        let mut layers: Vec<Layer> = (0..g.layer_count()).collect();
        match self {
            LayerOrder::Random(seed) => layers.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed)),
            // density is |E_l| / |V| with a shared denominator
            LayerOrder::DensityAscending => layers.sort_by_key(|&l| (g.edge_count(l), l)),
            LayerOrder::DensityDescending => layers.sort_by_key(|&l| (std::cmp::Reverse(g.edge_count(l)), l)),
            LayerOrder::Given(order) => {
                assert_eq!(order.len(), layers.len(), "layer order must list every layer once");
                return order.clone();
            }
        }
        layers
    }
}

/// Depth-first engine with layers retired in a seeded random order.
pub fn decompose_dfs(g: &MultilayerGraph, seed: u64) -> CoreDecomposition {
    decompose_dfs_with_order(g, &LayerOrder::Random(seed))
}

pub fn decompose_dfs_with_order(g: &MultilayerGraph, order: &LayerOrder) -> CoreDecomposition {
    dfs_search(g, &|c| !c.is_empty(), &order.resolve(g))
}

/// Depth-first lattice sweep.
///
/// `pending` starts at the root. Each round retires one layer; every pending
/// vector launches a path sweep along each layer where its component is zero.
/// Sweeps along layers still in play produce the next round's pending set,
/// sweeps along retired layers only contribute output cores.
pub(crate) fn dfs_search(
    g: &MultilayerGraph,
    accept: &dyn Fn(&VertexSet) -> bool,
    order: &[Layer],
) -> CoreDecomposition {
    let layers = g.layer_count();
    let mut collector = CoreCollector::new(layers);
    let mut stats = TraversalStats::default();
    if g.vertex_count() == 0 {
        return collector.finish(g, stats);
    }
    let root = CorenessVector::zeros(layers);
    let full = Rc::new(g.vertices());
    stats.cores_computed += 1;
    stats.cores_visited += 1;
    if !accept(&full) {
        return collector.finish(g, stats);
    }
    collector.add(&root, &full);

    let mut in_play = vec![true; layers];
    let mut pending: Vec<(CorenessVector, Rc<VertexSet>)> = vec![(root, full)];
    for &retired in order {
        in_play[retired] = false;
        let mut next_order = Vec::new();
        let mut next: HashMap<CorenessVector, Rc<VertexSet>> = HashMap::new();
        for (k, core) in &pending {
            for layer in (0..layers).filter(|&l| k.get(l) == 0) {
                for (found, set) in cores_path_while(g, core, k, layer, accept) {
                    stats.cores_computed += 1;
                    stats.cores_visited += 1;
                    let set = Rc::new(set);
                    if in_play[layer] {
                        if let std::collections::hash_map::Entry::Vacant(slot) = next.entry(found) {
                            next_order.push(slot.key().clone());
                            slot.insert(set);
                        }
                    } else {
                        collector.add(&found, &set);
                    }
                }
            }
        }
        pending = next_order
            .into_iter()
            .map(|k| {
                let set = next.remove(&k).unwrap();
                collector.add(&k, &set);
                (k, set)
            })
            .collect();
    }
    collector.finish(g, stats)
}
