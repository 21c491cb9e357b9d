use std::rc::Rc;

use super::{CoreCollector, CoreDecomposition, TraversalStats};
use crate::graph::{MultilayerGraph, VertexSet};
use crate::peel::{layer_bounds, peel_unchecked};
use crate::vector::CorenessVector;

/// Every non-empty `(vector, core)` node of the lattice, in lexicographic
/// vector order, found by peeling each vector of `[0, K]` from the full graph.
pub fn lattice_nodes(g: &MultilayerGraph) -> Vec<(CorenessVector, VertexSet)> {
    if g.vertex_count() == 0 {
        return Vec::new();
    }
    let all = g.vertices();
    let bounds = layer_bounds(g);
    CorenessVector::box_between(&CorenessVector::zeros(g.layer_count()), &bounds)
        .filter_map(|k| {
            let core = peel_unchecked(g, &all, &k);
            (!core.is_empty()).then_some((k, core))
        })
        .collect()
}

/// Reference engine: peel every vector of the box from scratch and keep the
/// distinct non-empty results.
pub fn decompose_naive(g: &MultilayerGraph) -> CoreDecomposition {
    let layers = g.layer_count();
    let mut collector = CoreCollector::new(layers);
    let mut stats = TraversalStats::default();
    if g.vertex_count() == 0 {
        return collector.finish(g, stats);
    }
    let all = g.vertices();
    let bounds = layer_bounds(g);
    for k in CorenessVector::box_between(&CorenessVector::zeros(layers), &bounds) {
        stats.cores_computed += 1;
        stats.cores_visited += 1;
        let core = peel_unchecked(g, &all, &k);
        if !core.is_empty() {
            collector.add(&k, &Rc::new(core));
        }
    }
    collector.finish(g, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::toy_graph;

    #[test]
    fn toy_lattice_has_thirteen_nonempty_nodes() {
        let g = toy_graph();
        assert_eq!(lattice_nodes(&g).len(), 13);
        let d = decompose_naive(&g);
        assert_eq!(d.len(), 5);
        assert_eq!(d.stats.cores_computed, 16);
    }
}
