//! Frequent cross-graph quasi-cliques and core-based search-space pruning.
//!
//! A set `S` is a `gamma`-quasi-clique in a layer when every member has at
//! least `gamma (|S| - 1)` neighbours inside `S` there. Mining looks for the
//! maximal sets of at least `min_size` vertices that are quasi-cliques in at
//! least `ceil(min_sup |L|)` layers. Every such set lies inside the union of
//! the cores whose vectors reach `ceil(gamma_l (min_size - 1))` on enough
//! layers, so mining can start from that union instead of `V`.

use fixedbitset::FixedBitSet;

use crate::decomposition::CoreDecomposition;
use crate::error::{argument, Error, Result};
use crate::graph::{Layer, MultilayerGraph, VertexSet};

const EPS: f64 = 1e-9;

/// Default limit on the number of vertices the miner enumerates over.
pub const ENUM_CAP: usize = 30;

fn ceil_eps(x: f64) -> usize {
    (x - EPS).ceil().max(0.0) as usize
}

#[derive(Clone, Debug, PartialEq)]
pub struct MiningParams {
    gamma: Vec<f64>,
    min_sup: f64,
    min_size: usize,
}

impl MiningParams {
    /// `gamma` holds one threshold per layer.
    pub fn new(gamma: Vec<f64>, min_sup: f64, min_size: usize) -> Result<Self> {
        if let Some(bad) = gamma.iter().find(|g| !(**g > 0.0 && **g <= 1.0)) {
            return argument(format!("gamma must lie in (0, 1], got {bad}"));
        }
        if !(min_sup > 0.0 && min_sup <= 1.0) {
            return argument(format!("min_sup must lie in (0, 1], got {min_sup}"));
        }
        if min_size < 2 {
            return argument(format!("min_size must be at least 2, got {min_size}"));
        }
        Ok(MiningParams { gamma, min_sup, min_size })
    }

    pub fn uniform(gamma: f64, layers: usize, min_sup: f64, min_size: usize) -> Result<Self> {
        Self::new(vec![gamma; layers], min_sup, min_size)
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn min_sup(&self) -> f64 {
        self.min_sup
    }

    pub fn min_size(&self) -> usize {
        self.min_size
    }

    /// `ceil(min_sup * |L|)`.
    pub fn required_support(&self) -> usize {
        ceil_eps(self.min_sup * self.gamma.len() as f64)
    }

    /// Minimum in-set degree on `layer` for a set of `size` vertices.
    pub fn degree_threshold(&self, layer: Layer, size: usize) -> usize {
        ceil_eps(self.gamma[layer] * size.saturating_sub(1) as f64)
    }

    fn check(&self, g: &MultilayerGraph) -> Result<()> {
        if self.gamma.len() != g.layer_count() {
            return argument(format!("{} gamma values given for {} layers", self.gamma.len(), g.layer_count()));
        }
        Ok(())
    }
}

/// Whether every member of `set` has at least `gamma (|S| - 1)` neighbours
/// in `set` on `layer`.
pub fn is_quasi_clique(g: &MultilayerGraph, set: &VertexSet, layer: Layer, gamma: f64) -> bool {
    let need = gamma * set.len().saturating_sub(1) as f64;
    set.iter().all(|u| g.degree_within(set, u, layer) as f64 >= need - EPS)
}

/// Union of the cores whose maximal vectors meet the degree threshold on
/// at least the required number of layers.
pub fn prune_graph(g: &MultilayerGraph, d: &CoreDecomposition, p: &MiningParams) -> VertexSet {
    let thresholds: Vec<usize> = (0..p.gamma.len()).map(|l| p.degree_threshold(l, p.min_size)).collect();
    let need = p.required_support();
    let mut keep = vec![false; g.vertex_count()];
    for core in d.cores() {
        let support = thresholds.iter().enumerate().filter(|(l, t)| core.vector.get(*l) as usize >= **t).count();
        if support >= need {
            for u in core.vertices.iter() {
                keep[u as usize] = true;
            }
        }
    }
    (0..g.vertex_count() as u32).filter(|&u| keep[u as usize]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuasiClique {
    pub vertices: VertexSet,
    /// Layers on which the set is a quasi-clique.
    pub layers: Vec<Layer>,
}

/// Maximal qualifying sets, sorted by vertex list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuasiCliqueSet {
    pub subgraphs: Vec<QuasiClique>,
}

impl QuasiCliqueSet {
    pub fn len(&self) -> usize {
        self.subgraphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgraphs.is_empty()
    }

    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        self.subgraphs.iter().map(|q| q.vertices.clone()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinerOptions {
    /// Refuse to enumerate over more vertices than this; `None` disables the check.
    pub enum_cap: Option<usize>,
}

impl Default for MinerOptions {
    fn default() -> Self {
        MinerOptions { enum_cap: Some(ENUM_CAP) }
    }
}

/// Result of mining on the pruned vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrunedMining {
    pub result: QuasiCliqueSet,
    /// The pruned vertex set; its size is the search space actually mined.
    pub kept: VertexSet,
}

struct Miner<'a> {
    p: &'a MiningParams,
    /// adj[l][i]: neighbours of local vertex i on layer l, as local indices
    adj: Vec<Vec<FixedBitSet>>,
    need: usize,
    found: Vec<FixedBitSet>,
}

impl Miner<'_> {
    fn degree(&self, layer: Layer, u: usize, within: &FixedBitSet) -> usize {
        self.adj[layer][u].intersection_count(within)
    }

    /// Layers on which every member of `set` meets the threshold for its size.
    fn support(&self, set: &FixedBitSet) -> Vec<Layer> {
        let size = set.count_ones(..);
        (0..self.adj.len())
            .filter(|&l| {
                let t = self.p.degree_threshold(l, size);
                set.ones().all(|u| self.degree(l, u, set) >= t)
            })
            .collect()
    }

    fn search(&mut self, x: &mut FixedBitSet, size: usize, mut cand: Vec<usize>) {
        if size >= self.p.min_size && self.support(x).len() >= self.need {
            self.found.push(x.clone());
        }
        // prune candidates until stable against degree upper bounds
        loop {
            if cand.is_empty() || size + cand.len() < self.p.min_size {
                return;
            }
            let mut reach = x.clone();
            reach.extend(cand.iter().copied());
            let smallest = (size + 1).max(self.p.min_size);
            let thresholds: Vec<usize> =
                (0..self.adj.len()).map(|l| self.p.degree_threshold(l, smallest)).collect();
            let viable: Vec<Layer> = (0..self.adj.len())
                .filter(|&l| x.ones().all(|u| self.degree(l, u, &reach) >= thresholds[l]))
                .collect();
            if viable.len() < self.need {
                return;
            }
            let before = cand.len();
            cand.retain(|&v| viable.iter().filter(|&&l| self.degree(l, v, &reach) >= thresholds[l]).count() >= self.need);
            if cand.len() == before {
                break;
            }
        }
        for i in 0..cand.len() {
            let v = cand[i];
            x.insert(v);
            self.search(x, size + 1, cand[i + 1..].to_vec());
            x.set(v, false);
        }
    }
}

/// Maximal frequent cross-graph quasi-cliques within `restrict`.
pub fn mine_fcgqc(
    g: &MultilayerGraph,
    restrict: &VertexSet,
    p: &MiningParams,
    options: MinerOptions,
) -> Result<QuasiCliqueSet> {
    p.check(g)?;
    if let Some(bad) = restrict.iter().find(|&u| u as usize >= g.vertex_count()) {
        return argument(format!("vertex {bad} out of range"));
    }
    if let Some(cap) = options.enum_cap {
        if restrict.len() > cap {
            return Err(Error::Refused(format!(
                "quasi-clique enumeration refused: {} vertices exceed the cap of {cap}",
                restrict.len()
            )));
        }
    }
    let local = restrict.as_slice();
    let m = local.len();
    let index = |u: u32| local.binary_search(&u).ok();
    let adj: Vec<Vec<FixedBitSet>> = (0..g.layer_count())
        .map(|l| {
            local
                .iter()
                .map(|&u| {
                    let mut row = FixedBitSet::with_capacity(m);
                    row.extend(g.neighbors(u, l).iter().filter_map(|&w| index(w)));
                    row
                })
                .collect()
        })
        .collect();
    let mut miner = Miner { p, adj, need: p.required_support(), found: Vec::new() };
    if m >= p.min_size {
        miner.search(&mut FixedBitSet::with_capacity(m), 0, (0..m).collect());
    }

    // keep sets with no qualifying strict superset
    let mut found = std::mem::take(&mut miner.found);
    found.sort_by_key(|s| std::cmp::Reverse(s.count_ones(..)));
    let mut maximal: Vec<FixedBitSet> = Vec::new();
    for s in found {
        if !maximal.iter().any(|big| s.is_subset(big)) {
            maximal.push(s);
        }
    }
    let mut subgraphs: Vec<QuasiClique> = maximal
        .iter()
        .map(|s| QuasiClique {
            vertices: VertexSet::new(s.ones().map(|i| local[i])),
            layers: miner.support(s),
        })
        .collect();
    subgraphs.sort();
    Ok(QuasiCliqueSet { subgraphs })
}

/// Mines only the vertices that survive core-based pruning.
pub fn mine_fcgqc_pruned(
    g: &MultilayerGraph,
    d: &CoreDecomposition,
    p: &MiningParams,
    options: MinerOptions,
) -> Result<PrunedMining> {
    p.check(g)?;
    let kept = prune_graph(g, d, p);
    let result = mine_fcgqc(g, &kept, p, options)?;
    Ok(PrunedMining { result, kept })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose_hybrid;
    use crate::toy::toy_graph;

    fn set(g: &MultilayerGraph, labels: &str) -> VertexSet {
        labels.chars().map(|c| g.vertex_by_label(&c.to_string()).unwrap()).collect()
    }

    #[test]
    fn params_validation() {
        assert!(MiningParams::new(vec![0.5, 1.0], 0.5, 3).is_ok());
        assert!(MiningParams::new(vec![0.0], 0.5, 3).is_err());
        assert!(MiningParams::new(vec![1.1], 0.5, 3).is_err());
        assert!(MiningParams::new(vec![0.5], 0.0, 3).is_err());
        assert!(MiningParams::new(vec![0.5], 0.5, 1).is_err());
        let p = MiningParams::uniform(0.5, 4, 0.5, 3).unwrap();
        assert_eq!(p.required_support(), 2);
        assert_eq!(p.degree_threshold(0, 3), 1);
        assert_eq!(p.degree_threshold(0, 4), 2);
        assert_eq!(MiningParams::uniform(0.3, 3, 1.0 / 3.0, 3).unwrap().required_support(), 1);
    }

    #[test]
    fn quasi_clique_predicate() {
        let g = toy_graph();
        assert!(is_quasi_clique(&g, &set(&g, "BEF"), 0, 1.0));
        assert!(!is_quasi_clique(&g, &set(&g, "BCEF"), 0, 1.0));
        assert!(is_quasi_clique(&g, &set(&g, "C"), 0, 1.0));
    }

    #[test]
    fn pruning_examples() {
        let g = toy_graph();
        let d = decompose_hybrid(&g);
        let p = MiningParams::uniform(1.0, 2, 1.0, 3).unwrap();
        assert_eq!(prune_graph(&g, &d, &p), set(&g, "BEF"));
        let p = MiningParams::uniform(0.5, 2, 0.5, 3).unwrap();
        assert_eq!(prune_graph(&g, &d, &p), g.vertices());
        let p = MiningParams::uniform(1.0, 2, 1.0, 6).unwrap();
        assert!(prune_graph(&g, &d, &p).is_empty());
    }

    #[test]
    fn mining_examples() {
        let g = toy_graph();
        let d = decompose_hybrid(&g);
        let p = MiningParams::uniform(1.0, 2, 1.0, 3).unwrap();
        let full = mine_fcgqc(&g, &g.vertices(), &p, MinerOptions::default()).unwrap();
        assert_eq!(full.vertex_sets(), vec![set(&g, "BEF")]);
        assert_eq!(full.subgraphs[0].layers, vec![0, 1]);
        let restricted = mine_fcgqc(&g, &set(&g, "BEF"), &p, MinerOptions::default()).unwrap();
        assert_eq!(restricted, full);
        let pruned = mine_fcgqc_pruned(&g, &d, &p, MinerOptions::default()).unwrap();
        assert_eq!((pruned.result, pruned.kept.len()), (full, 3));
        let p = MiningParams::uniform(1.0, 2, 1.0, 7).unwrap();
        assert!(mine_fcgqc(&g, &g.vertices(), &p, MinerOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn cap_and_dimension_errors() {
        let g = MultilayerGraph::from_edges(31, 1, []).unwrap();
        let p = MiningParams::uniform(1.0, 1, 1.0, 3).unwrap();
        assert!(matches!(mine_fcgqc(&g, &g.vertices(), &p, MinerOptions::default()), Err(Error::Refused(_))));
        assert!(mine_fcgqc(&g, &g.vertices(), &p, MinerOptions { enum_cap: None }).unwrap().is_empty());
        let p = MiningParams::uniform(1.0, 2, 1.0, 3).unwrap();
        assert!(mine_fcgqc(&g, &g.vertices(), &p, MinerOptions::default()).is_err());
    }

    #[test]
    fn maximality_keeps_only_largest() {
        // a 4-clique on one layer: every triangle qualifies but only the clique is maximal
        let mut edges = Vec::new();
        for u in 0..4 {
            for w in u + 1..4 {
                edges.push((u, w, 0));
            }
        }
        let g = MultilayerGraph::from_edges(5, 1, edges).unwrap();
        let p = MiningParams::uniform(1.0, 1, 1.0, 3).unwrap();
        let r = mine_fcgqc(&g, &g.vertices(), &p, MinerOptions::default()).unwrap();
        assert_eq!(r.vertex_sets(), vec![VertexSet::new([0, 1, 2, 3])]);
    }
}
