//! Complete multilayer core decomposition.
//!
//! Four engines produce the same set of distinct cores, each keyed by its
//! maximal coreness vector:
//!
//! * [`decompose_naive`] peels every vector of the box `[0, K]` from scratch;
//! * [`decompose_bfs`] walks the lattice level by level and peels a child from
//!   the intersection of its fathers;
//! * [`decompose_dfs`] sweeps whole lattice paths with one peeling pass each;
//! * [`decompose_hybrid`] is the breadth-first walk plus look-ahead, which
//!   skips every vector between a core's vector and its min-degree vector.

mod dfs;
mod lattice;
mod naive;

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::error::{argument, Result};
use crate::graph::{MultilayerGraph, VertexSet};
use crate::peel::min_degree_vector;
use crate::vector::CorenessVector;

pub use dfs::{decompose_dfs, decompose_dfs_with_order, LayerOrder};
pub use lattice::{decompose_bfs, decompose_bfs_traced, decompose_hybrid, BfsNode};
pub use naive::{decompose_naive, lattice_nodes};

pub(crate) use dfs::dfs_search;
pub(crate) use lattice::lattice_search;

/// A non-empty core and its maximal coreness vector (the per-layer minimum
/// in-core degree).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Core {
    pub vertices: VertexSet,
    pub vector: CorenessVector,
}

/// Work counters for one decomposition run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TraversalStats {
    /// Cores produced by peeling, counting each step of a path sweep.
    pub cores_computed: usize,
    /// Lattice nodes examined, including those resolved without peeling.
    pub cores_visited: usize,
    pub output_cores: usize,
}

/// All distinct non-empty cores of a graph.
#[derive(Clone, Debug, Default)]
pub struct CoreDecomposition {
    layers: usize,
    cores: BTreeMap<CorenessVector, Core>,
    pub stats: TraversalStats,
}

impl CoreDecomposition {
    pub fn layer_count(&self) -> usize {
        self.layers
    }

    pub fn len(&self) -> usize {
        self.cores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cores.is_empty()
    }

    /// Cores in lexicographic order of their maximal vectors.
    pub fn cores(&self) -> impl Iterator<Item = &Core> {
        self.cores.values()
    }

    pub fn get(&self, maximal: &CorenessVector) -> Option<&Core> {
        self.cores.get(maximal)
    }

    /// `(maximal vector, vertex set)` pairs, for comparing engines.
    pub fn to_map(&self) -> BTreeMap<CorenessVector, VertexSet> {
        self.cores.iter().map(|(k, c)| (k.clone(), c.vertices.clone())).collect()
    }

    /// Resolves any vector, maximal or not, to the core it denotes.
    ///
    /// Every stored core whose maximal vector dominates `k` is contained in
    /// the `k`-core, and the `k`-core itself is stored, so the answer is the
    /// largest such entry.
    pub fn lookup(&self, k: &CorenessVector) -> Result<Option<&Core>> {
        if k.len() != self.layers {
            return argument(format!("coreness vector has {} components, decomposition has {} layers", k.len(), self.layers));
        }
        Ok(self.cores.values().filter(|c| c.vector.dominates(k)).max_by_key(|c| c.vertices.len()))
    }

    /// Largest component per layer over all stored vectors; the box every
    /// non-empty vector lies in.
    pub fn layer_bounds(&self) -> CorenessVector {
        let mut bounds = CorenessVector::zeros(self.layers);
        for k in self.cores.keys() {
            bounds = bounds.componentwise_max(k);
        }
        bounds
    }
}

/// Deduplicates cores by vertex set while an engine runs.
pub(crate) struct CoreCollector {
    layers: usize,
    by_set: HashMap<Rc<VertexSet>, CorenessVector>,
}

impl CoreCollector {
    pub(crate) fn new(layers: usize) -> Self {
        CoreCollector { layers, by_set: HashMap::new() }
    }

    /// Records `set` as the `k`-core, keeping the componentwise maximum of
    /// all vectors seen for the same set.
    pub(crate) fn add(&mut self, k: &CorenessVector, set: &Rc<VertexSet>) {
        debug_assert!(!set.is_empty());
        self.by_set
            .entry(Rc::clone(set))
            .and_modify(|seen| *seen = seen.componentwise_max(k))
            .or_insert_with(|| k.clone());
    }

    /// Stores each distinct set under its min-degree vector.
    pub(crate) fn finish(self, g: &MultilayerGraph, mut stats: TraversalStats) -> CoreDecomposition {
        let mut cores = BTreeMap::new();
        for (set, seen) in self.by_set {
            let vector = min_degree_vector(g, &set);
            debug_assert!(vector.dominates(&seen));
            let vertices = Rc::try_unwrap(set).unwrap_or_else(|shared| (*shared).clone());
            cores.insert(vector.clone(), Core { vertices, vector });
        }
        stats.output_cores = cores.len();
        CoreDecomposition { layers: self.layers, cores, stats }
    }
}

/// Which complete-decomposition engine to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Naive,
    Bfs,
    Dfs,
    Hybrid,
}

impl std::str::FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "naive" => Ok(Engine::Naive),
            "bfs" => Ok(Engine::Bfs),
            "dfs" => Ok(Engine::Dfs),
            "hybrid" => Ok(Engine::Hybrid),
            other => Err(format!("unknown engine `{other}` (expected naive, bfs, dfs or hybrid)")),
        }
    }
}

/// Runs `engine`; `seed` only affects the depth-first layer order.
pub fn decompose(g: &MultilayerGraph, engine: Engine, seed: u64) -> CoreDecomposition {
    match engine {
        Engine::Naive => decompose_naive(g),
        Engine::Bfs => decompose_bfs(g),
        Engine::Dfs => decompose_dfs(g, seed),
        Engine::Hybrid => decompose_hybrid(g),
    }
}
