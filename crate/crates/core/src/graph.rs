//! Multilayer graph model: one shared vertex set, several undirected edge
//! layers, no inter-layer edges.
//!
//! Vertices are remapped to dense indices `0..n` at load time and every layer
//! stores its adjacency in compressed sorted-neighbor form, so membership
//! tests are binary searches and peeling can use plain arrays.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{argument, Error, Result};

/// Dense vertex index.
pub type Vertex = u32;

/// Dense, 0-based layer index.
pub type Layer = usize;

/// A set of vertices kept sorted and duplicate-free, so equal sets compare
/// and hash identically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = Vertex>) -> Self {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// `members` must already be strictly increasing.
    pub(crate) fn from_sorted(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n as Vertex).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut theirs = other.0.iter();
        'outer: for &v in &self.0 {
            for &w in theirs.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len().min(other.len()));
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet(out)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Counts gathered while loading an edge list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub edges_loaded: usize,
    pub duplicates_ignored: usize,
    pub self_loops_ignored: usize,
    /// Number of distinct layer ids that appeared in the input.
    pub layers_seen: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct LayerAdjacency {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl LayerAdjacency {
    fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for u in 0..n {
            targets[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        LayerAdjacency { offsets, targets }
    }

    fn neighbors(&self, u: Vertex) -> &[Vertex] {
        let u = u as usize;
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }
}

/// An immutable undirected multilayer graph `G = (V, E, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilayerGraph {
    vertex_count: usize,
    layers: Vec<LayerAdjacency>,
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
}

impl MultilayerGraph {
    /// Builds a graph over vertices labelled `"0"..n` from `(u, v, layer)`
    /// triples. Self-loops and duplicates are dropped.
    pub fn from_edges(
        vertex_count: usize,
        layer_count: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Layer)>,
    ) -> Result<Self> {
        let mut builder = GraphBuilder::with_layers(layer_count);
        for v in 0..vertex_count {
            builder.add_vertex(&v.to_string());
        }
        for (u, v, layer) in edges {
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return argument(format!("edge ({u}, {v}) out of range for {vertex_count} vertices"));
            }
            if layer >= layer_count {
                return argument(format!("layer {layer} out of range for {layer_count} layers"));
            }
            builder.add_edge_ids(u, v, layer);
        }
        Ok(builder.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count)
    }

    /// Sorted neighbors of `u` in `layer`.
    pub fn neighbors(&self, u: Vertex, layer: Layer) -> &[Vertex] {
        self.layers[layer].neighbors(u)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex, layer: Layer) -> bool {
        self.neighbors(u, layer).binary_search(&v).is_ok()
    }

    pub fn edge_count(&self, layer: Layer) -> usize {
        self.layers[layer].targets.len() / 2
    }

    pub fn label(&self, u: Vertex) -> &str {
        &self.labels[u as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    fn check_layer(&self, layer: Layer) -> Result<()> {
        if layer >= self.layer_count() {
            return argument(format!("layer {layer} out of range (graph has {} layers)", self.layer_count()));
        }
        Ok(())
    }

    /// Number of neighbors of `u` in `layer` that lie in `set`.
    pub fn degree(&self, set: &VertexSet, u: Vertex, layer: Layer) -> Result<usize> {
        self.check_layer(layer)?;
        if !set.contains(u) {
            return argument(format!("vertex {u} is not in the set"));
        }
        Ok(self.degree_within(set, u, layer))
    }

    pub(crate) fn degree_within(&self, set: &VertexSet, u: Vertex, layer: Layer) -> usize {
        self.neighbors(u, layer).iter().filter(|&&v| set.contains(v)).count()
    }

    /// Minimum over `u` in `set` of the in-set degree in `layer`.
    pub fn min_degree(&self, set: &VertexSet, layer: Layer) -> Result<usize> {
        self.check_layer(layer)?;
        if set.is_empty() {
            return argument("minimum degree of an empty set is undefined");
        }
        Ok(set.iter().map(|u| self.degree_within(set, u, layer)).min().unwrap())
    }

    /// `|E_layer[set]|`.
    pub fn induced_edge_count(&self, set: &VertexSet, layer: Layer) -> usize {
        set.iter().map(|u| self.degree_within(set, u, layer)).sum::<usize>() / 2
    }

    /// Average-degree density `|E_layer| / |V|` of a whole layer.
    pub fn layer_density(&self, layer: Layer) -> Result<f64> {
        self.check_layer(layer)?;
        if self.vertex_count == 0 {
            return argument("density of a graph without vertices is undefined");
        }
        Ok(self.edge_count(layer) as f64 / self.vertex_count as f64)
    }

    /// Writes the graph in the edge-list format read by [`load_edge_list`].
    ///
    /// Each edge is written once as `source target layer`. Vertices without
    /// any edge, and a trailing layer without edges, are written as self-loop
    /// lines: the loader registers the vertex and the layer but adds no edge.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let mut touched = vec![false; self.vertex_count];
        for layer in 0..self.layer_count() {
            for u in 0..self.vertex_count as Vertex {
                for &v in self.neighbors(u, layer) {
                    if u < v {
                        touched[u as usize] = true;
                        touched[v as usize] = true;
                        writeln!(out, "{} {} {}", self.label(u), self.label(v), layer)?;
                    }
                }
            }
        }
        for (u, _) in touched.iter().enumerate().filter(|(_, &t)| !t) {
            let label = self.label(u as Vertex);
            writeln!(out, "{label} {label} 0")?;
        }
        if let Some(last) = self.layer_count().checked_sub(1) {
            if self.edge_count(last) == 0 && self.vertex_count > 0 {
                let label = self.label(0);
                writeln!(out, "{label} {label} {last}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultilayerGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, {} layers (edges:", self.vertex_count, self.layer_count())?;
        for layer in 0..self.layer_count() {
            write!(f, " {}", self.edge_count(layer))?;
        }
        write!(f, ")")
    }
}

/// Outcome of a single [`GraphBuilder::add_edge`] call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOutcome {
    Added,
    Duplicate,
    SelfLoop,
}

/// Incremental construction of a [`MultilayerGraph`] from labelled edges.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: Vec<HashSet<(Vertex, Vertex)>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_layers(layer_count: usize) -> Self {
        GraphBuilder { edges: vec![HashSet::new(); layer_count], ..Self::default() }
    }

    /// Returns the dense index of `label`, registering it on first sight.
    pub fn add_vertex(&mut self, label: &str) -> Vertex {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = self.labels.len() as Vertex;
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), v);
        v
    }

    fn ensure_layer(&mut self, layer: Layer) {
        if self.edges.len() <= layer {
            self.edges.resize_with(layer + 1, HashSet::new);
        }
    }

    pub fn add_edge(&mut self, source: &str, target: &str, layer: Layer) -> EdgeOutcome {
        let u = self.add_vertex(source);
        let v = self.add_vertex(target);
        self.add_edge_ids(u, v, layer)
    }

    fn add_edge_ids(&mut self, u: Vertex, v: Vertex, layer: Layer) -> EdgeOutcome {
        self.ensure_layer(layer);
        if u == v {
            return EdgeOutcome::SelfLoop;
        }
        if self.edges[layer].insert((u.min(v), u.max(v))) {
            EdgeOutcome::Added
        } else {
            EdgeOutcome::Duplicate
        }
    }

    pub fn build(self) -> MultilayerGraph {
        let n = self.labels.len();
        let layers = self
            .edges
            .iter()
            .map(|set| {
                let mut edges: Vec<_> = set.iter().copied().collect();
                edges.sort_unstable();
                LayerAdjacency::build(n, &edges)
            })
            .collect();
        MultilayerGraph { vertex_count: n, layers, labels: self.labels, index: self.index }
    }
}

/// Parses the whitespace-separated `source target layer` edge-list format.
///
/// Lines starting with `#` and blank lines are skipped. The layer count is one
/// more than the largest layer id seen.
pub fn load_edge_list<R: BufRead>(source: R) -> Result<(MultilayerGraph, IngestReport)> {
    let mut builder = GraphBuilder::new();
    let mut report = IngestReport::default();
    let mut seen_layers = HashSet::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 3 tokens `<source> <target> <layer>`, found {}", tokens.len()),
            });
        }
        let layer: i64 = tokens[2].parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("layer `{}` is not an integer", tokens[2]),
        })?;
        if layer < 0 {
            return Err(Error::Parse { line: lineno, message: format!("negative layer id {layer}") });
        }
        let layer = layer as Layer;
        seen_layers.insert(layer);
        match builder.add_edge(tokens[0], tokens[1], layer) {
            EdgeOutcome::Added => report.edges_loaded += 1,
            EdgeOutcome::Duplicate => report.duplicates_ignored += 1,
            EdgeOutcome::SelfLoop => report.self_loops_ignored += 1,
        }
    }
    report.layers_seen = seen_layers.len();
    Ok((builder.build(), report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::{toy_graph, TOY_EDGE_LIST};

    fn set(g: &MultilayerGraph, labels: &str) -> VertexSet {
        labels.chars().map(|c| g.vertex_by_label(&c.to_string()).unwrap()).collect()
    }

    #[test]
    fn loads_toy_graph() {
        let (g, report) = load_edge_list(TOY_EDGE_LIST.as_bytes()).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.layer_count(), 2);
        assert_eq!(g.edge_count(0), 9);
        assert_eq!(g.edge_count(1), 8);
        assert_eq!(report.edges_loaded, 17);
        assert_eq!(report.layers_seen, 2);
    }

    #[test]
    fn empty_stream() {
        let (g, report) = load_edge_list(&b""[..]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.layer_count(), 0);
        assert_eq!(report, IngestReport::default());
    }

    #[test]
    fn duplicates_and_self_loops() {
        let input = "A B 0\nB A 0\nA B 0\nA A 0\n";
        let (g, report) = load_edge_list(input.as_bytes()).unwrap();
        assert_eq!(report.edges_loaded, 1);
        assert_eq!(report.duplicates_ignored, 2);
        assert_eq!(report.self_loops_ignored, 1);
        assert_eq!(g.edge_count(0), 1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let input = "# header\n\n  \nA B 1\n# trailing\n";
        let (g, report) = load_edge_list(input.as_bytes()).unwrap();
        assert_eq!(g.layer_count(), 2);
        assert_eq!(g.edge_count(0), 0);
        assert_eq!(report.layers_seen, 1);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = load_edge_list("A B 0\nA B\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = load_edge_list("A B x\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = load_edge_list("# c\nA B -1\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn degrees_on_toy_graph() {
        let g = toy_graph();
        let a = g.vertex_by_label("A").unwrap();
        let b = g.vertex_by_label("B").unwrap();
        assert_eq!(g.degree(&g.vertices(), a, 1).unwrap(), 1);
        assert_eq!(g.degree(&set(&g, "BEF"), b, 0).unwrap(), 2);
        assert_eq!(g.degree(&VertexSet::new([a]), a, 0).unwrap(), 0);
        assert_eq!(g.degree(&VertexSet::new([a]), a, 1).unwrap(), 0);
    }

    #[test]
    fn degree_argument_errors() {
        let g = toy_graph();
        let a = g.vertex_by_label("A").unwrap();
        assert!(matches!(g.degree(&set(&g, "BEF"), a, 0), Err(Error::Argument(_))));
        assert!(matches!(g.degree(&g.vertices(), a, 2), Err(Error::Argument(_))));
    }

    #[test]
    fn min_degrees_on_toy_graph() {
        let g = toy_graph();
        assert_eq!(g.min_degree(&set(&g, "ABDE"), 0).unwrap(), 3);
        assert_eq!(g.min_degree(&set(&g, "ABDE"), 1).unwrap(), 1);
        assert_eq!(g.min_degree(&g.vertices(), 0).unwrap(), 1);
        assert_eq!(g.min_degree(&set(&g, "C"), 1).unwrap(), 0);
        assert!(g.min_degree(&VertexSet::empty(), 0).is_err());
    }

    #[test]
    fn densities_on_toy_graph() {
        let g = toy_graph();
        assert_eq!(g.layer_density(0).unwrap(), 1.5);
        assert!((g.layer_density(1).unwrap() - 8.0 / 6.0).abs() < 1e-12);
        let h = MultilayerGraph::from_edges(3, 2, [(0, 1, 0)]).unwrap();
        assert_eq!(h.layer_density(1).unwrap(), 0.0);
        let empty = MultilayerGraph::from_edges(0, 1, []).unwrap();
        assert!(empty.layer_density(0).is_err());
    }

    #[test]
    fn vertex_set_operations() {
        let a = VertexSet::new([5, 1, 3, 3]);
        let b = VertexSet::new([1, 2, 3, 4, 5]);
        assert_eq!(a.as_slice(), &[1, 3, 5]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(!VertexSet::new([0]).is_subset(&b));
        assert_eq!(a.intersection(&VertexSet::new([3, 4, 5])).as_slice(), &[3, 5]);
        assert_eq!(a.union(&VertexSet::new([0])).as_slice(), &[0, 1, 3, 5]);
    }

    #[test]
    fn round_trip_keeps_isolated_vertices_and_empty_layers() {
        let input = "A B 0\nC C 0\nB D 2\nD E 0\n";
        let (g, _) = load_edge_list(input.as_bytes()).unwrap();
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        let (h, _) = load_edge_list(buf.as_slice()).unwrap();
        assert_eq!(crate::toy::labelled_edges(&g), crate::toy::labelled_edges(&h));
        assert_eq!(h.layer_count(), 3);
        assert!(h.vertex_by_label("C").is_some());
    }
}
