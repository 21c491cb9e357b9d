//! Multilayer community search.
//!
//! Given query vertices, find the vertex set containing them that maximizes
//! the minimum in-set degree over a layer subset, weighted by the subset's
//! size. The optimum is always a core, so the lattice engines run with
//! "contains the query" in place of "non-empty" and the best visited core by
//! its vector score wins.

use std::cmp::Ordering;
use std::str::FromStr;

use crate::decomposition::{dfs_search, lattice_search, LayerOrder};
use crate::densest::{adjacency_masks, check_cap, mask_to_set, BRUTEFORCE_CAP};
use crate::error::{argument, Error, Result};
use crate::graph::{Layer, MultilayerGraph, VertexSet};
use crate::peel::min_degree_vector;
use crate::score::{best_prefix, check_beta, compare_log, LayerChoice};
use crate::vector::CorenessVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Bfs,
    Dfs,
    Hybrid,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bfs" => Ok(Strategy::Bfs),
            "dfs" => Ok(Strategy::Dfs),
            "hybrid" => Ok(Strategy::Hybrid),
            other => Err(format!("unknown strategy `{other}` (expected bfs, dfs or hybrid)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommunityQuery {
    pub query_vertices: VertexSet,
    pub beta: f64,
    pub strategy: Strategy,
    /// Layer order seed for the depth-first strategy.
    pub seed: u64,
}

impl CommunityQuery {
    pub fn new(query_vertices: VertexSet, beta: f64, strategy: Strategy) -> Self {
        CommunityQuery { query_vertices, beta, strategy, seed: 0 }
    }

    fn validate(&self, g: &MultilayerGraph) -> Result<()> {
        check_beta(self.beta)?;
        if self.query_vertices.is_empty() {
            return argument("query vertex set is empty");
        }
        if let Some(bad) = self.query_vertices.iter().find(|&u| u as usize >= g.vertex_count()) {
            return argument(format!("query vertex {bad} out of range"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommunityResult {
    pub vertices: VertexSet,
    pub score: f64,
    pub best_layers: Vec<Layer>,
    pub vector: CorenessVector,
}

fn check_set(g: &MultilayerGraph, set: &VertexSet) -> Result<()> {
    if set.is_empty() {
        return argument("vertex set is empty");
    }
    if let Some(bad) = set.iter().find(|&u| u as usize >= g.vertex_count()) {
        return argument(format!("vertex {bad} out of range"));
    }
    Ok(())
}

/// Minimum in-set degree over the given layers.
pub fn phi(g: &MultilayerGraph, set: &VertexSet, layers: &[Layer]) -> Result<u32> {
    check_set(g, set)?;
    if layers.is_empty() {
        return argument("layer subset is empty");
    }
    if let Some(bad) = layers.iter().find(|&&l| l >= g.layer_count()) {
        return argument(format!("layer {bad} out of range"));
    }
    let vector = min_degree_vector(g, set);
    Ok(layers.iter().map(|&l| vector.get(l)).min().unwrap_or(0))
}

fn vector_choice(k: &CorenessVector, beta: f64) -> LayerChoice {
    let values: Vec<f64> = k.as_slice().iter().map(|&c| c as f64).collect();
    best_prefix(&values, beta)
}

/// Best `phi(S, L') * |L'|^beta` over layer subsets, with an attaining subset.
pub fn theta(g: &MultilayerGraph, set: &VertexSet, beta: f64) -> Result<(f64, Vec<Layer>)> {
    check_beta(beta)?;
    check_set(g, set)?;
    let c = vector_choice(&min_degree_vector(g, set), beta);
    Ok((c.value, c.layers))
}

/// Vector score: `theta` evaluated on the components of `k`.
pub fn sigma(k: &CorenessVector, beta: f64) -> f64 {
    vector_choice(k, beta).value
}

/// Best core containing the query vertices.
pub fn community_search(g: &MultilayerGraph, q: &CommunityQuery) -> Result<CommunityResult> {
    if g.vertex_count() == 0 {
        return Err(Error::NoCore);
    }
    q.validate(g)?;
    let query = &q.query_vertices;
    let accept = |c: &VertexSet| query.is_subset(c);
    let visited = match q.strategy {
        Strategy::Bfs => lattice_search(g, &accept, false, None),
        Strategy::Hybrid => lattice_search(g, &accept, true, None),
        Strategy::Dfs => dfs_search(g, &accept, &LayerOrder::Random(q.seed).resolve(g)),
    };
    let mut best: Option<(LayerChoice, &crate::decomposition::Core)> = None;
    for core in visited.cores() {
        debug_assert!(query.is_subset(&core.vertices));
        let choice = vector_choice(&core.vector, q.beta);
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
    let (_, core) = best.ok_or(Error::NoCore)?;
    let (score, best_layers) = theta(g, &core.vertices, q.beta)?;
    Ok(CommunityResult { vertices: core.vertices.clone(), score, best_layers, vector: core.vector.clone() })
}

/// Exhaustive optimum over all supersets of the query, with the default cap.
pub fn community_bruteforce(g: &MultilayerGraph, q: &CommunityQuery) -> Result<CommunityResult> {
    community_bruteforce_capped(g, q, BRUTEFORCE_CAP)
}

/// Exhaustive optimum; ties prefer fewer vertices, then the
/// lexicographically smaller vertex list.
pub fn community_bruteforce_capped(g: &MultilayerGraph, q: &CommunityQuery, cap: usize) -> Result<CommunityResult> {
    check_cap(g, cap)?;
    if g.vertex_count() == 0 {
        return Err(Error::NoCore);
    }
    q.validate(g)?;
    let adj = adjacency_masks(g);
    let base: u64 = q.query_vertices.iter().fold(0, |m, u| m | 1 << u);
    let free: Vec<u32> = (0..g.vertex_count() as u32).filter(|u| base >> u & 1 == 0).collect();
    let mut values = vec![0.0; g.layer_count()];
    let mut best: Option<(LayerChoice, u64)> = None;
    for pick in 0..1u64 << free.len() {
        let mask = free.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).fold(base, |m, (_, &u)| m | 1 << u);
        for (l, value) in values.iter_mut().enumerate() {
            let mut min = u32::MAX;
            let mut rest = mask;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                min = min.min((adj[l][u] & mask).count_ones());
            }
            *value = min as f64;
        }
        let choice = best_prefix(&values, q.beta);
        let better = match &best {
            None => true,
            Some((b, bm)) => compare_log(choice.log_value, b.log_value)
                .then_with(|| bm.count_ones().cmp(&mask.count_ones()))
                .then_with(|| mask_to_set(*bm).as_slice().cmp(mask_to_set(mask).as_slice()))
                == Ordering::Greater,
        };
        if better {
            best = Some((choice, mask));
        }
    }
    let (choice, mask) = best.expect("the query itself is a candidate");
    let vertices = mask_to_set(mask);
    let vector = min_degree_vector(g, &vertices);
    Ok(CommunityResult { vertices, score: choice.value, best_layers: choice.layers, vector })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::toy_graph;

    fn set(g: &MultilayerGraph, labels: &str) -> VertexSet {
        labels.chars().map(|c| g.vertex_by_label(&c.to_string()).unwrap()).collect()
    }

    fn v(c: &[u32]) -> CorenessVector {
        CorenessVector::new(c.to_vec())
    }

    #[test]
    fn phi_examples() {
        let g = toy_graph();
        assert_eq!(phi(&g, &set(&g, "BEF"), &[0, 1]).unwrap(), 2);
        assert_eq!(phi(&g, &g.vertices(), &[0]).unwrap(), 1);
        assert_eq!(phi(&g, &set(&g, "A"), &[0, 1]).unwrap(), 0);
        assert!(phi(&g, &VertexSet::empty(), &[0]).is_err());
        assert!(phi(&g, &set(&g, "A"), &[]).is_err());
    }

    #[test]
    fn theta_and_sigma_examples() {
        let g = toy_graph();
        assert_eq!(theta(&g, &set(&g, "BEF"), 1.0).unwrap(), (4.0, vec![0, 1]));
        assert_eq!(theta(&g, &set(&g, "BCEF"), 1.0).unwrap(), (3.0, vec![1]));
        assert_eq!(theta(&g, &set(&g, "C"), 1.0).unwrap().0, 0.0);
        assert_eq!(sigma(&v(&[2, 2]), 1.0), 4.0);
        assert_eq!(sigma(&v(&[3, 1]), 1.0), 3.0);
        assert_eq!(sigma(&v(&[0, 0]), 1.0), 0.0);
    }

    #[test]
    fn search_examples() {
        let g = toy_graph();
        for strategy in [Strategy::Bfs, Strategy::Dfs, Strategy::Hybrid] {
            let r = community_search(&g, &CommunityQuery::new(set(&g, "F"), 1.0, strategy)).unwrap();
            assert_eq!((r.vertices, r.score, r.vector), (set(&g, "BEF"), 4.0, v(&[2, 2])), "{strategy:?}");
            let r = community_search(&g, &CommunityQuery::new(set(&g, "C"), 1.0, strategy)).unwrap();
            assert_eq!((r.vertices, r.score, r.vector), (set(&g, "BCEF"), 3.0, v(&[1, 3])), "{strategy:?}");
            let r = community_search(&g, &CommunityQuery::new(g.vertices(), 1.0, strategy)).unwrap();
            assert_eq!((r.vertices, r.score, r.vector), (g.vertices(), 2.0, v(&[1, 1])), "{strategy:?}");
        }
    }

    #[test]
    fn bruteforce_examples() {
        let g = toy_graph();
        let q = |labels: &str| CommunityQuery::new(set(&g, labels), 1.0, Strategy::Bfs);
        assert_eq!(community_bruteforce(&g, &q("F")).unwrap().score, 4.0);
        assert_eq!(community_bruteforce(&g, &q("C")).unwrap().score, 3.0);
        let r = community_bruteforce(&g, &q("ABCDEF")).unwrap();
        assert_eq!((r.vertices, r.score), (g.vertices(), 2.0));
    }

    #[test]
    fn isolated_query_vertex_returns_the_root() {
        let g = MultilayerGraph::from_edges(4, 2, [(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        let r = community_search(&g, &CommunityQuery::new(VertexSet::new([3]), 1.0, Strategy::Hybrid)).unwrap();
        assert_eq!((r.vertices, r.score), (VertexSet::full(4), 0.0));
    }

    #[test]
    fn errors() {
        let g = toy_graph();
        assert!(community_search(&g, &CommunityQuery::new(VertexSet::empty(), 1.0, Strategy::Bfs)).is_err());
        assert!(community_search(&g, &CommunityQuery::new(VertexSet::new([9]), 1.0, Strategy::Bfs)).is_err());
        assert!(community_search(&g, &CommunityQuery::new(VertexSet::new([0]), -1.0, Strategy::Bfs)).is_err());
        let empty = MultilayerGraph::from_edges(0, 1, []).unwrap();
        assert!(matches!(
            community_search(&empty, &CommunityQuery::new(VertexSet::new([0]), 1.0, Strategy::Bfs)),
            Err(Error::NoCore)
        ));
        let big = MultilayerGraph::from_edges(17, 1, []).unwrap();
        assert!(matches!(
            community_bruteforce(&big, &CommunityQuery::new(VertexSet::new([0]), 1.0, Strategy::Bfs)),
            Err(Error::Refused(_))
        ));
        assert_eq!("dfs".parse::<Strategy>(), Ok(Strategy::Dfs));
        assert!("x".parse::<Strategy>().is_err());
    }
}
