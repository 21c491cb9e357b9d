//! Multilayer densest subgraph.
//!
//! The density of `S` trades the minimum average-degree density over a layer
//! subset against the subset's size, weighted by `beta`. The best core of the
//! decomposition is a `1 / (2 |L|^beta)` approximation of the optimum, and
//! the best inner-most core carries the same guarantee.

use std::cmp::Ordering;

use crate::decomposition::{decompose_hybrid, Core};
use crate::error::{argument, Error, Result};
use crate::graph::{Layer, MultilayerGraph, VertexSet};
use crate::innermost::innermost_cores;
use crate::score::{best_prefix, check_beta, compare_log, LayerChoice};

/// Default vertex cap for the exhaustive solvers.
pub const BRUTEFORCE_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct DensestResult {
    pub vertices: VertexSet,
    pub delta_value: f64,
    pub best_layers: Vec<Layer>,
    pub beta: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensestMode {
    Full,
    InnermostOnly,
}

fn densities(g: &MultilayerGraph, set: &VertexSet) -> Vec<f64> {
    (0..g.layer_count()).map(|l| g.induced_edge_count(set, l) as f64 / set.len() as f64).collect()
}

fn choose(g: &MultilayerGraph, set: &VertexSet, beta: f64) -> LayerChoice {
    best_prefix(&densities(g, set), beta)
}

/// Multilayer density of `set` and one layer subset attaining it.
pub fn delta(g: &MultilayerGraph, set: &VertexSet, beta: f64) -> Result<(f64, Vec<Layer>)> {
    check_beta(beta)?;
    if set.is_empty() {
        return argument("density of an empty vertex set is undefined");
    }
    if let Some(bad) = set.iter().find(|&u| u as usize >= g.vertex_count()) {
        return argument(format!("vertex {bad} out of range"));
    }
    let c = choose(g, set, beta);
    Ok((c.value, c.layers))
}

/// Per-layer `|E_l[S]| / |S|`.
pub fn layer_densities(g: &MultilayerGraph, set: &VertexSet) -> Vec<f64> {
    if set.is_empty() {
        return vec![0.0; g.layer_count()];
    }
    densities(g, set)
}

/// The core maximizing the multilayer density.
pub fn densest_subgraph(g: &MultilayerGraph, beta: f64, mode: DensestMode) -> Result<DensestResult> {
    check_beta(beta)?;
    let cores: Vec<Core> = match mode {
        DensestMode::Full => decompose_hybrid(g).cores().cloned().collect(),
        DensestMode::InnermostOnly => innermost_cores(g).cores,
    };
    let mut best: Option<(LayerChoice, Core)> = None;
    for core in cores {
        let choice = choose(g, &core.vertices, beta);
        let better = match &best {
            None => true,
            Some((b, bc)) => compare_log(choice.log_value, b.log_value)
                .then_with(|| bc.vertices.len().cmp(&core.vertices.len()))
                .then_with(|| bc.vector.cmp(&core.vector))
                == Ordering::Greater,
        };
        if better {
            best = Some((choice, core));
        }
    }
    let (choice, core) = best.ok_or(Error::NoCore)?;
    Ok(DensestResult { vertices: core.vertices, delta_value: choice.value, best_layers: choice.layers, beta })
}

/// Per-layer adjacency as bit masks, for graphs within an exhaustive cap.
pub(crate) fn adjacency_masks(g: &MultilayerGraph) -> Vec<Vec<u64>> {
    (0..g.layer_count())
        .map(|l| {
            (0..g.vertex_count() as u32).map(|u| g.neighbors(u, l).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
        })
        .collect()
}

pub(crate) fn check_cap(g: &MultilayerGraph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap.min(63) {
        return Err(Error::Refused(format!(
            "exhaustive search refused: {} vertices exceed the cap of {}",
            g.vertex_count(),
            cap.min(63)
        )));
    }
    Ok(())
}

pub(crate) fn mask_to_set(mask: u64) -> VertexSet {
    VertexSet::new((0..64).filter(|b| mask >> b & 1 == 1))
}

/// Exhaustive optimum over every non-empty vertex subset, with the default cap.
pub fn densest_bruteforce(g: &MultilayerGraph, beta: f64) -> Result<DensestResult> {
    densest_bruteforce_capped(g, beta, BRUTEFORCE_CAP)
}

/// Exhaustive optimum. Ties prefer more selected layers, then fewer
/// vertices, then the lexicographically smaller vertex list.
pub fn densest_bruteforce_capped(g: &MultilayerGraph, beta: f64, cap: usize) -> Result<DensestResult> {
    check_beta(beta)?;
    check_cap(g, cap)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NoCore);
    }
    let layers = g.layer_count();
    let adj = adjacency_masks(g);
    // edges[mask * layers + l] built from the mask without its lowest bit
    let total = 1usize << n;
    let mut edges = vec![0u32; total * layers];
    let mut best: Option<(LayerChoice, u64)> = None;
    let mut values = vec![0.0; layers];
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let size = mask.count_ones() as f64;
        for l in 0..layers {
            let e = edges[rest * layers + l] + (adj[l][low] & rest as u64).count_ones();
            edges[mask * layers + l] = e;
            values[l] = e as f64 / size;
        }
        let choice = best_prefix(&values, beta);
        let better = match &best {
            None => true,
            Some((b, bm)) => compare_log(choice.log_value, b.log_value)
                .then_with(|| choice.layers.len().cmp(&b.layers.len()))
                .then_with(|| bm.count_ones().cmp(&(mask as u64).count_ones()))
                .then_with(|| mask_to_set(*bm).as_slice().cmp(mask_to_set(mask as u64).as_slice()))
                == Ordering::Greater,
        };
        if better {
            best = Some((choice, mask as u64));
        }
    }
    let (choice, mask) = best.expect("at least one subset");
    Ok(DensestResult { vertices: mask_to_set(mask), delta_value: choice.value, best_layers: choice.layers, beta })
}
