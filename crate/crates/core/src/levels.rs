//! Per-level lattice statistics. Level `i` holds every non-empty coreness
//! vector whose components sum to `i`, each counted separately even when
//! several vectors denote the same core.

use std::collections::BTreeMap;

use crate::decomposition::CoreDecomposition;
use crate::graph::MultilayerGraph;
use crate::vector::CorenessVector;

#[derive(Clone, Debug, PartialEq)]
pub struct LevelRow {
    pub level: u64,
    pub cores: usize,
    pub mean_size: f64,
    /// Mean over the level's vectors of (edges summed over layers) / |C|.
    pub mean_density: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct LevelStats {
    pub levels: Vec<LevelRow>,
}

impl LevelStats {
    pub fn total_cores(&self) -> usize {
        self.levels.iter().map(|r| r.cores).sum()
    }
}

/// Aggregates every vector of the box bounded by the decomposition's
/// per-layer maxima, resolved to its core by lookup.
pub fn level_stats(g: &MultilayerGraph, d: &CoreDecomposition) -> LevelStats {
    if d.is_empty() {
        return LevelStats::default();
    }
    let zero = CorenessVector::zeros(d.layer_count());
    // level -> (count, size sum, density sum)
    let mut acc: BTreeMap<u64, (usize, f64, f64)> = BTreeMap::new();
    let mut density_of = BTreeMap::new();
    for k in CorenessVector::box_between(&zero, &d.layer_bounds()) {
        let Some(core) = d.lookup(&k).expect("dimension matches") else { continue };
        let density = *density_of.entry(core.vector.clone()).or_insert_with(|| {
            let edges: usize = (0..g.layer_count()).map(|l| g.induced_edge_count(&core.vertices, l)).sum();
            edges as f64 / core.vertices.len() as f64
        });
        let e = acc.entry(k.level()).or_default();
        e.0 += 1;
        e.1 += core.vertices.len() as f64;
        e.2 += density;
    }
    LevelStats {
        levels: acc
            .into_iter()
            .map(|(level, (cores, size, density))| LevelRow {
                level,
                cores,
                mean_size: size / cores as f64,
                mean_density: density / cores as f64,
            })
            .collect(),
    }
}
