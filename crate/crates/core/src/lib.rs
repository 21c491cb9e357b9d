//! Core decomposition of multilayer networks.
//!
//! A multilayer graph shares one vertex set across several undirected edge
//! layers. A core is identified by a vector of per-layer minimum degrees;
//! the distinct non-empty cores form a lattice under componentwise order.
//! This crate computes that lattice ([`decomposition`]), extracts its maximal
//! elements directly ([`innermost`]), and uses it for densest-subgraph
//! approximation ([`densest`]), quasi-clique search-space pruning
//! ([`quasiclique`]) and community search ([`community`]).

pub mod community;
pub mod decomposition;
pub mod densest;
pub mod error;
pub mod generate;
pub mod graph;
pub mod innermost;
pub mod levels;
pub mod peel;
pub mod quasiclique;
pub mod score;
pub mod toy;
pub mod vector;

pub use community::{community_bruteforce, community_search, CommunityQuery, CommunityResult, Strategy};
pub use decomposition::{
    decompose, decompose_bfs, decompose_dfs, decompose_hybrid, decompose_naive, Core, CoreDecomposition, Engine,
    TraversalStats,
};
pub use densest::{delta, densest_bruteforce, densest_subgraph, DensestMode, DensestResult};
pub use error::{Error, Result};
pub use graph::{load_edge_list, IngestReport, Layer, MultilayerGraph, Vertex, VertexSet};
pub use innermost::{filter_innermost, innermost_cores, InnermostSet};
pub use levels::{level_stats, LevelRow, LevelStats};
pub use peel::{cores_path, maximal_vector, peel_core};
pub use quasiclique::{mine_fcgqc, mine_fcgqc_pruned, prune_graph, MiningParams, QuasiCliqueSet};
pub use vector::CorenessVector;
