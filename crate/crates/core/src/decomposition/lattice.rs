//! Level-order lattice traversal shared by the breadth-first and hybrid
//! engines and by community search.

use std::collections::HashMap;
use std::rc::Rc;

use super::{CoreCollector, CoreDecomposition, TraversalStats};
use crate::graph::{MultilayerGraph, VertexSet};
use crate::peel::{cores_path_while, layer_bounds, min_degree_vector, peel_unchecked};
use crate::vector::CorenessVector;

/// One node the breadth-first engine peeled and found non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsNode {
    pub vector: CorenessVector,
    /// Number of father cores recorded for the node when it was peeled.
    pub fathers: usize,
    /// Whether the peeled core lies inside every recorded father.
    pub within_fathers: bool,
}

/// Breadth-first engine.
pub fn decompose_bfs(g: &MultilayerGraph) -> CoreDecomposition {
    lattice_search(g, &|c| !c.is_empty(), false, None)
}

/// [`decompose_bfs`] that also reports every non-empty node it peeled.
pub fn decompose_bfs_traced(g: &MultilayerGraph) -> (CoreDecomposition, Vec<BfsNode>) {
    let mut trace = Vec::new();
    let d = lattice_search(g, &|c| !c.is_empty(), false, Some(&mut trace));
    (d, trace)
}

/// Breadth-first engine with look-ahead, seeded by one path sweep per layer.
pub fn decompose_hybrid(g: &MultilayerGraph) -> CoreDecomposition {
    lattice_search(g, &|c| !c.is_empty(), true, None)
}

/// Cores resolved without peeling, keyed by vector.
struct LookAhead {
    known: HashMap<CorenessVector, Rc<VertexSet>>,
}

impl LookAhead {
    /// Every vector between `k` and the min-degree vector of its core denotes
    /// that same core.
    fn mark(&mut self, g: &MultilayerGraph, k: &CorenessVector, core: &Rc<VertexSet>) {
        let top = min_degree_vector(g, core);
        for between in CorenessVector::box_between(k, &top) {
            self.known.entry(between).or_insert_with(|| Rc::clone(core));
        }
    }

    fn forget_below(&mut self, level: u64) {
        self.known.retain(|k, _| k.level() >= level);
    }
}

/// Level-order walk over the lattice.
///
/// A node is peeled only once all of its fathers were accepted (their number
/// equals the node's non-zero component count), starting from the
/// intersection of the fathers. `accept` replaces the non-emptiness test, so
/// a containment predicate turns the walk into community search. Children
/// above the single-layer bounds `K` are never enqueued.
pub(crate) fn lattice_search(
    g: &MultilayerGraph,
    accept: &dyn Fn(&VertexSet) -> bool,
    look_ahead: bool,
    mut trace: Option<&mut Vec<BfsNode>>,
) -> CoreDecomposition {
    let layers = g.layer_count();
    let mut collector = CoreCollector::new(layers);
    let mut stats = TraversalStats::default();
    if g.vertex_count() == 0 {
        return collector.finish(g, stats);
    }
    let bounds = layer_bounds(g);
    let full = Rc::new(g.vertices());
    let root = CorenessVector::zeros(layers);
    let mut ahead = LookAhead { known: HashMap::new() };

    if look_ahead {
        for layer in 0..layers {
            stats.cores_visited += 1;
            for (k, core) in cores_path_while(g, &full, &root, layer, accept) {
                stats.cores_computed += 1;
                let core = Rc::new(core);
                collector.add(&k, &core);
                ahead.mark(g, &k, &core);
            }
        }
    }

    // (vector, father cores) for the current level, in discovery order
    let mut level: Vec<(CorenessVector, Vec<Rc<VertexSet>>)> = vec![(root, Vec::new())];
    let mut depth = 0u64;
    while !level.is_empty() {
        let mut order: Vec<CorenessVector> = Vec::new();
        let mut next: HashMap<CorenessVector, Vec<Rc<VertexSet>>> = HashMap::new();
        for (k, fathers) in level {
            stats.cores_visited += 1;
            let mut resolved: Option<Rc<VertexSet>> = None;
            if fathers.len() == k.nonzero_count() && !ahead.known.contains_key(&k) {
                let start = match fathers.split_first() {
                    None => VertexSet::clone(&full),
                    Some((first, rest)) => rest.iter().fold(VertexSet::clone(first), |acc, f| acc.intersection(f)),
                };
                let core = peel_unchecked(g, &start, &k);
                stats.cores_computed += 1;
                if accept(&core) {
                    if let Some(trace) = trace.as_deref_mut() {
                        trace.push(BfsNode {
                            vector: k.clone(),
                            fathers: fathers.len(),
                            within_fathers: fathers.iter().all(|f| core.is_subset(f)),
                        });
                    }
                    let core = Rc::new(core);
                    collector.add(&k, &core);
                    if look_ahead {
                        ahead.mark(g, &k, &core);
                    }
                    resolved = Some(core);
                }
            }
            if look_ahead {
                resolved = ahead.known.get(&k).cloned();
            }
            let Some(core) = resolved else { continue };
            for layer in 0..layers {
                if k.get(layer) >= bounds.get(layer) {
                    continue;
                }
                let child = k.with(layer, k.get(layer) + 1);
                next.entry(child.clone())
                    .or_insert_with(|| {
                        order.push(child);
                        Vec::new()
                    })
                    .push(Rc::clone(&core));
            }
        }
        depth += 1;
        if look_ahead {
            ahead.forget_below(depth);
        }
        level = order
            .into_iter()
            .map(|k| {
                let fathers = next.remove(&k).unwrap_or_default();
                (k, fathers)
            })
            .collect();
    }
    collector.finish(g, stats)
}
