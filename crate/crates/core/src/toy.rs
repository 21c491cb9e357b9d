//! A small two-layer graph with hand-checkable cores, used by tests, docs
//! and the CLI smoke tests.
//!
//! Its distinct cores are `(1,1) = ABCDEF`, `(2,1) = ABDEF`, `(3,1) = ABDE`,
//! `(1,3) = BCEF` and `(2,2) = BEF`.

use std::collections::BTreeSet;

use crate::graph::{load_edge_list, MultilayerGraph, Vertex};

/// Layer 0 has 9 edges, layer 1 has 8.
pub const TOY_EDGE_LIST: &str = "\
# layer 0
A B 0
A D 0
A E 0
B C 0
B D 0
B E 0
B F 0
D E 0
E F 0
# layer 1
A B 1
B C 1
B D 1
B E 1
B F 1
C E 1
C F 1
E F 1
";

pub fn toy_graph() -> MultilayerGraph {
    load_edge_list(TOY_EDGE_LIST.as_bytes()).expect("toy edge list parses").0
}

/// All edges as `(layer, smaller label, larger label)`, for comparing graphs
/// independently of their internal vertex numbering.
pub fn labelled_edges(g: &MultilayerGraph) -> BTreeSet<(usize, String, String)> {
    let mut out = BTreeSet::new();
    for layer in 0..g.layer_count() {
        for u in 0..g.vertex_count() as Vertex {
            for &v in g.neighbors(u, layer) {
                let (a, b) = (g.label(u).to_owned(), g.label(v).to_owned());
                out.insert((layer, a.clone().min(b.clone()), a.max(b)));
            }
        }
    }
    out
}
