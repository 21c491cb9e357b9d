//! Inner-most cores: those whose maximal vector no other core dominates.
//!
//! [`innermost_cores`] finds them without building the whole decomposition.
//! Layers are processed in non-decreasing density order; for each prefix of
//! fixed components the search descends one layer at a time, visiting larger
//! components first, and at the last layer pushes that layer's component as
//! high as it goes. A nested threshold map remembers, per prefix, the
//! last-layer value a core must exceed to avoid being dominated by one found
//! earlier.

use std::collections::BTreeMap;

use crate::decomposition::{Core, CoreDecomposition};
use crate::graph::{Layer, MultilayerGraph, VertexSet};
use crate::peel::{cores_path_while, highest_along, min_degree_vector};
use crate::vector::CorenessVector;

/// Cores whose maximal vectors are pairwise non-dominating, sorted by vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InnermostSet {
    pub cores: Vec<Core>,
}

impl InnermostSet {
    fn from_cores(cores: impl IntoIterator<Item = Core>) -> Self {
        let by_vector: BTreeMap<CorenessVector, Core> = cores.into_iter().map(|c| (c.vector.clone(), c)).collect();
        InnermostSet { cores: by_vector.into_values().collect() }
    }

    pub fn len(&self) -> usize {
        self.cores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cores.is_empty()
    }

    pub fn to_map(&self) -> BTreeMap<CorenessVector, VertexSet> {
        self.cores.iter().map(|c| (c.vector.clone(), c.vertices.clone())).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Entry {
    Nested(BTreeMap<u32, Entry>),
    Value(u32),
}

/// Nested maps keyed by the leading components of a vector (in processing
/// order); leaves hold the minimum last-layer component a new core must
/// reach. Absent keys read as 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RightInnermostContext {
    root: BTreeMap<u32, Entry>,
    decreased: bool,
}

impl RightInnermostContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// Leaf value for a full prefix, 0 if any key on the way is absent.
    pub fn get(&self, prefix: &[u32]) -> u32 {
        let Some((last, inner)) = prefix.split_last() else { return 0 };
        let mut map = &self.root;
        for key in inner {
            match map.get(key) {
                Some(Entry::Nested(next)) => map = next,
                _ => return 0,
            }
        }
        match map.get(last) {
            Some(Entry::Value(v)) => *v,
            _ => 0,
        }
    }

    fn descend(&mut self, keys: &[u32]) -> &mut BTreeMap<u32, Entry> {
        let mut map = &mut self.root;
        for key in keys {
            let entry = map.entry(*key).or_insert_with(|| Entry::Nested(BTreeMap::new()));
            if let Entry::Value(_) = entry {
                *entry = Entry::Nested(BTreeMap::new());
            }
            map = match entry {
                Entry::Nested(next) => next,
                Entry::Value(_) => unreachable!(),
            };
        }
        map
    }

    /// Makes sure the nested map for a partial prefix exists.
    pub fn open(&mut self, keys: &[u32]) {
        self.descend(keys);
    }

    pub fn set(&mut self, prefix: &[u32], value: u32) {
        let Some((last, inner)) = prefix.split_last() else { return };
        let previous = self.get(prefix);
        if value < previous {
            self.decreased = true;
        }
        self.descend(inner).insert(*last, Entry::Value(value));
    }

    /// False if any leaf was ever overwritten with a smaller value.
    pub fn monotone(&self) -> bool {
        !self.decreased
    }

    /// Number of leaves stored.
    pub fn leaf_count(&self) -> usize {
        fn count(map: &BTreeMap<u32, Entry>) -> usize {
            map.values()
                .map(|e| match e {
                    Entry::Nested(m) => count(m),
                    Entry::Value(_) => 1,
                })
                .sum()
        }
        count(&self.root)
    }
}

/// Recursive search state for one run over a fixed layer order.
pub struct InnermostSearch<'g> {
    g: &'g MultilayerGraph,
    order: Vec<Layer>,
    pub context: RightInnermostContext,
}

impl<'g> InnermostSearch<'g> {
    /// `order` lists every layer once; position `r` is processed at depth `r`.
    pub fn new(g: &'g MultilayerGraph, order: Vec<Layer>) -> Self {
        assert_eq!(order.len(), g.layer_count(), "order must list every layer");
        InnermostSearch { g, order, context: RightInnermostContext::new() }
    }

    /// Layers sorted by non-decreasing density, ties by index.
    pub fn by_density(g: &'g MultilayerGraph) -> Self {
        let mut order: Vec<Layer> = (0..g.layer_count()).collect();
        order.sort_by_key(|&l| (g.edge_count(l), l));
        Self::new(g, order)
    }

    fn prefix(&self, k: &CorenessVector, len: usize) -> Vec<u32> {
        self.order[..len].iter().map(|&l| k.get(l)).collect()
    }

    /// Right-inner-most cores of the `k`-core `set` from depth `r` on: cores
    /// agreeing with `k` on the first `r` layers of the order and not
    /// dominated on the remaining ones.
    pub fn rim_cores(&mut self, set: &VertexSet, k: &CorenessVector, r: usize) -> Vec<Core> {
        let last = self.order.len() - 1;
        if r < last {
            let layer = self.order[r];
            let mut queue = cores_path_while(self.g, set, k, layer, &|_| true);
            queue.insert(0, (k.clone(), set.clone()));
            let mut found = Vec::new();
            for (next, core) in queue.into_iter().rev() {
                let keys = self.prefix(&next, r + 1);
                self.context.open(&keys);
                found.extend(self.rim_cores(&core, &next, r + 1));
            }
            found
        } else {
            let mut floor = 0;
            for j in 0..last {
                let bumped = k.with(self.order[j], k.get(self.order[j]) + 1);
                floor = floor.max(self.context.get(&self.prefix(&bumped, last)));
            }
            let layer = self.order[last];
            let query = k.with(layer, floor);
            let keys = self.prefix(k, last);
            match innermost_core_in_layer(self.g, set, &query, layer) {
                Some(core) => {
                    let top = core.vector.get(layer);
                    self.context.set(&keys, top + 1);
                    vec![core]
                }
                None => {
                    self.context.set(&keys, floor);
                    Vec::new()
                }
            }
        }
    }

    pub fn run(mut self) -> (InnermostSet, RightInnermostContext) {
        if self.g.vertex_count() == 0 || self.order.is_empty() {
            return (InnermostSet::default(), self.context);
        }
        let root = CorenessVector::zeros(self.g.layer_count());
        let cores = self.rim_cores(&self.g.vertices(), &root, 0);
        (InnermostSet::from_cores(cores), self.context)
    }
}

/// All inner-most cores, with vectors in the graph's own layer order.
pub fn innermost_cores(g: &MultilayerGraph) -> InnermostSet {
    InnermostSearch::by_density(g).run().0
}

/// The core of `set` with the largest component on `layer`, subject to the
/// other components of `k` and to `k[layer]` as a floor.
pub fn innermost_core_in_layer(
    g: &MultilayerGraph,
    set: &VertexSet,
    k: &CorenessVector,
    layer: Layer,
) -> Option<Core> {
    let (top, vertices) = highest_along(g, set, k, layer)?;
    let vector = min_degree_vector(g, &vertices);
    debug_assert_eq!(vector.get(layer), top);
    Some(Core { vertices, vector })
}

/// Keeps the cores of a complete decomposition that no other core dominates.
pub fn filter_innermost(d: &CoreDecomposition) -> InnermostSet {
    let all: Vec<&Core> = d.cores().collect();
    InnermostSet::from_cores(
        all.iter()
            .filter(|c| !all.iter().any(|o| o.vector.strictly_dominates(&c.vector)))
            .map(|c| (*c).clone()),
    )
}


#[cfg(test)]
mod random_tests {
    use super::*;
    use crate::decomposition::decompose_hybrid;
    use crate::generate::gnp;

    #[test]
    fn matches_filtered_decomposition_on_random_graphs() {
        for seed in 0..60 {
            let layers = 1 + (seed as usize % 4);
            let g = gnp(14 + seed as usize % 7, layers, 0.25 + 0.05 * (seed % 5) as f64, seed);
            let (set, context) = InnermostSearch::by_density(&g).run();
            assert_eq!(set, filter_innermost(&decompose_hybrid(&g)), "seed {seed}");
            assert!(context.monotone());
        }
    }
}
