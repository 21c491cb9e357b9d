//! Seeded random multilayer graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{MultilayerGraph, Vertex};

/// Independent Erdős–Rényi `G(n, p)` per layer, vertices labelled `"0".."n-1"`.
pub fn gnp(vertices: usize, layers: usize, p: f64, seed: u64) -> MultilayerGraph {
    gnp_per_layer(vertices, &vec![p; layers], seed)
}

/// Like [`gnp`] with its own edge probability for each layer.
pub fn gnp_per_layer(vertices: usize, probabilities: &[f64], seed: u64) -> MultilayerGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for (layer, &p) in probabilities.iter().enumerate() {
        for u in 0..vertices as Vertex {
            for v in u + 1..vertices as Vertex {
                if rng.gen_bool(p) {
                    edges.push((u, v, layer));
                }
            }
        }
    }
    MultilayerGraph::from_edges(vertices, probabilities.len(), edges).expect("generated edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_in_range() {
        let a = gnp(20, 3, 0.2, 9);
        let b = gnp(20, 3, 0.2, 9);
        assert_eq!(a, b);
        assert_eq!(a.layer_count(), 3);
        assert_eq!(gnp(10, 2, 1.0, 0).edge_count(1), 45);
        assert_eq!(gnp(10, 2, 0.0, 0).edge_count(0), 0);
    }
}
