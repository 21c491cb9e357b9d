//! Seeded random workloads shared by the benchmarks.

use mlcore::generate::gnp_per_layer;
use mlcore::MultilayerGraph;

/// A named random multilayer graph.
pub struct Workload {
    pub name: &'static str,
    pub graph: MultilayerGraph,
}

/// Graphs of increasing size with heterogeneous layer densities.
pub fn workloads() -> Vec<Workload> {
    vec![
        Workload { name: "n60_l3", graph: gnp_per_layer(60, &[0.10, 0.15, 0.20], 1) },
        Workload { name: "n200_l4", graph: gnp_per_layer(200, &[0.03, 0.05, 0.08, 0.04], 2) },
        Workload { name: "n500_l5", graph: gnp_per_layer(500, &[0.01, 0.02, 0.015, 0.03, 0.01], 3) },
    ]
}

/// Small graphs the exhaustive solvers can still handle.
pub fn small_workloads() -> Vec<Workload> {
    vec![
        Workload { name: "n14_l2", graph: gnp_per_layer(14, &[0.3, 0.4], 4) },
        Workload { name: "n25_l3", graph: gnp_per_layer(25, &[0.2, 0.25, 0.3], 5) },
    ]
}
