//! Degree-floor peeling: the k-core of a vertex subset and the one-pass
//! sweep along a single layer.
//!
//! Both routines keep per-layer in-set degrees for every live vertex. When a
//! vertex is removed its neighbors are re-checked in every layer, so a removal
//! triggered by one layer's floor cascades through the others.

use crate::error::{argument, Result};
use crate::graph::{Layer, MultilayerGraph, Vertex, VertexSet};
use crate::vector::CorenessVector;

/// Per-run working state over an immutable graph.
struct Peeler<'g> {
    g: &'g MultilayerGraph,
    members: Vec<Vertex>,
    alive: Vec<bool>,
    /// `degree[layer][v]`, valid for live vertices.
    degree: Vec<Vec<u32>>,
    alive_count: usize,
}

impl<'g> Peeler<'g> {
    fn new(g: &'g MultilayerGraph, set: &VertexSet) -> Self {
        let n = g.vertex_count();
        let mut alive = vec![false; n];
        for v in set.iter() {
            alive[v as usize] = true;
        }
        let mut degree = vec![vec![0u32; n]; g.layer_count()];
        for (layer, row) in degree.iter_mut().enumerate() {
            for v in set.iter() {
                row[v as usize] = g.neighbors(v, layer).iter().filter(|&&w| alive[w as usize]).count() as u32;
            }
        }
        Peeler { g, members: set.as_slice().to_vec(), alive, degree, alive_count: set.len() }
    }

    fn violates(&self, v: Vertex, k: &CorenessVector) -> bool {
        (0..self.degree.len()).any(|layer| self.degree[layer][v as usize] < k.get(layer))
    }

    /// Removes every vertex violating `k`, cascading until a fixpoint.
    fn enforce(&mut self, k: &CorenessVector) {
        let mut stack: Vec<Vertex> = self.members.iter().copied().filter(|&v| self.violates(v, k)).collect();
        while let Some(u) = stack.pop() {
            if !self.alive[u as usize] {
                continue;
            }
            self.remove(u, |layer, _w, d| d + 1 == k.get(layer), &mut stack);
        }
    }

    /// Kills `u` and decrements its live neighbors. `push(layer, w, new_degree)`
    /// decides whether neighbor `w` just became a violator.
    fn remove(&mut self, u: Vertex, mut push: impl FnMut(Layer, Vertex, u32) -> bool, stack: &mut Vec<Vertex>) {
        self.alive[u as usize] = false;
        self.alive_count -= 1;
        for layer in 0..self.degree.len() {
            for &w in self.g.neighbors(u, layer) {
                if !self.alive[w as usize] {
                    continue;
                }
                let d = &mut self.degree[layer][w as usize];
                *d -= 1;
                if push(layer, w, *d) {
                    stack.push(w);
                }
            }
        }
    }

    fn survivors(&self) -> VertexSet {
        VertexSet::from_sorted(self.members.iter().copied().filter(|&v| self.alive[v as usize]).collect())
    }

    /// Raises the floor on `layer` one step at a time starting above `k`'s
    /// component, recording each non-empty result until `keep` rejects one.
    ///
    /// Vertices are bucketed by their `layer` degree with lazy deletion, so
    /// the whole sweep costs a single peeling pass.
    fn sweep(
        &mut self,
        k: &CorenessVector,
        layer: Layer,
        keep: &dyn Fn(&VertexSet) -> bool,
    ) -> Vec<(CorenessVector, VertexSet)> {
        let mut out = Vec::new();
        if self.alive_count == 0 {
            return out;
        }
        let max_degree = self
            .members
            .iter()
            .filter(|&&v| self.alive[v as usize])
            .map(|&v| self.degree[layer][v as usize])
            .max()
            .unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); max_degree + 1];
        for &v in &self.members {
            if self.alive[v as usize] {
                buckets[self.degree[layer][v as usize] as usize].push(v);
            }
        }
        let mut floor = k.get(layer);
        loop {
            floor += 1;
            let below = (floor - 1) as usize;
            let mut stack: Vec<Vertex> = match buckets.get_mut(below) {
                Some(bucket) => std::mem::take(bucket),
                None => Vec::new(),
            };
            stack.retain(|&v| self.alive[v as usize] && self.degree[layer][v as usize] as usize == below);
            let mut newly_bucketed = Vec::new();
            while let Some(u) = stack.pop() {
                if !self.alive[u as usize] {
                    continue;
                }
                self.remove(
                    u,
                    |l, w, d| {
                        if l == layer {
                            if d + 1 == floor {
                                true
                            } else {
                                if d >= floor {
                                    newly_bucketed.push((d, w));
                                }
                                false
                            }
                        } else {
                            d + 1 == k.get(l)
                        }
                    },
                    &mut stack,
                );
                for (d, w) in newly_bucketed.drain(..) {
                    buckets[d as usize].push(w);
                }
            }
            if self.alive_count == 0 {
                break;
            }
            let core = self.survivors();
            if !keep(&core) {
                break;
            }
            debug_assert!(out.last().map_or(true, |(_, prev): &(CorenessVector, VertexSet)| core.is_subset(prev)));
            out.push((k.with(layer, floor), core));
        }
        out
    }
}

fn check_dimension(g: &MultilayerGraph, k: &CorenessVector) -> Result<()> {
    if k.len() != g.layer_count() {
        return argument(format!("coreness vector has {} components, graph has {} layers", k.len(), g.layer_count()));
    }
    Ok(())
}

/// The `k`-core of `set`: its unique maximal subset in which every vertex has
/// at least `k[l]` neighbors in every layer `l`. May be empty.
pub fn peel_core(g: &MultilayerGraph, set: &VertexSet, k: &CorenessVector) -> Result<VertexSet> {
    check_dimension(g, k)?;
    Ok(peel_unchecked(g, set, k))
}

pub(crate) fn peel_unchecked(g: &MultilayerGraph, set: &VertexSet, k: &CorenessVector) -> VertexSet {
    let mut p = Peeler::new(g, set);
    p.enforce(k);
    p.survivors()
}

/// Cores obtained by raising component `layer` of `k` to `k[layer]+1`,
/// `k[layer]+2`, ... while non-empty, each also satisfying the other
/// components of `k`. The input set is first peeled to `k` itself.
pub fn cores_path(
    g: &MultilayerGraph,
    set: &VertexSet,
    k: &CorenessVector,
    layer: Layer,
) -> Result<Vec<(CorenessVector, VertexSet)>> {
    check_dimension(g, k)?;
    if layer >= g.layer_count() {
        return argument(format!("layer {layer} out of range"));
    }
    Ok(cores_path_while(g, set, k, layer, &|_| true))
}

/// [`cores_path`] truncated before the first core `keep` rejects. Cores
/// along a path only shrink, so any containment-style predicate selects a
/// prefix.
pub(crate) fn cores_path_while(
    g: &MultilayerGraph,
    set: &VertexSet,
    k: &CorenessVector,
    layer: Layer,
    keep: &dyn Fn(&VertexSet) -> bool,
) -> Vec<(CorenessVector, VertexSet)> {
    let mut p = Peeler::new(g, set);
    p.enforce(k);
    p.sweep(k, layer, keep)
}

/// Peels `set` to `k`, then pushes component `layer` as high as it goes.
/// Returns the last non-empty core and the final floor reached, or `None` if
/// `k` itself empties `set`.
pub(crate) fn highest_along(
    g: &MultilayerGraph,
    set: &VertexSet,
    k: &CorenessVector,
    layer: Layer,
) -> Option<(u32, VertexSet)> {
    let mut p = Peeler::new(g, set);
    p.enforce(k);
    if p.alive_count == 0 {
        return None;
    }
    let base = p.survivors();
    match p.sweep(k, layer, &|_| true).pop() {
        Some((v, core)) => Some((v.get(layer), core)),
        None => Some((k.get(layer), base)),
    }
}

/// Per-layer minimum in-set degree of a non-empty core: its maximal coreness
/// vector.
pub fn maximal_vector(g: &MultilayerGraph, core: &VertexSet) -> Result<CorenessVector> {
    if core.is_empty() {
        return argument("maximal coreness vector of an empty set is undefined");
    }
    Ok(min_degree_vector(g, core))
}

pub(crate) fn min_degree_vector(g: &MultilayerGraph, core: &VertexSet) -> CorenessVector {
    debug_assert!(!core.is_empty());
    let mut inside = vec![false; g.vertex_count()];
    for v in core.iter() {
        inside[v as usize] = true;
    }
    let components = (0..g.layer_count())
        .map(|layer| {
            core.iter()
                .map(|u| g.neighbors(u, layer).iter().filter(|&&w| inside[w as usize]).count() as u32)
                .min()
                .unwrap()
        })
        .collect();
    CorenessVector::new(components)
}

/// Single-layer core index of every vertex in `layer` (bucket peeling).
pub fn core_numbers(g: &MultilayerGraph, layer: Layer) -> Vec<u32> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n as Vertex).map(|v| g.neighbors(v, layer).len()).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut bin = vec![0usize; max_degree + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut position = vec![0usize; n];
    let mut order = vec![0 as Vertex; n];
    for v in 0..n {
        position[v] = bin[degree[v]];
        order[position[v]] = v as Vertex;
        bin[degree[v]] += 1;
    }
    for d in (1..=max_degree).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;
    for i in 0..n {
        let v = order[i] as usize;
        for &w in g.neighbors(v as Vertex, layer) {
            let w = w as usize;
            if degree[w] > degree[v] {
                let dw = degree[w];
                let pw = position[w];
                let first = bin[dw];
                let u = order[first] as usize;
                if u != w {
                    order.swap(pw, first);
                    position[u] = pw;
                    position[w] = first;
                }
                bin[dw] += 1;
                degree[w] -= 1;
            }
        }
    }
    degree.into_iter().map(|d| d as u32).collect()
}

/// `K_l` for every layer: the largest single-layer core index. No non-empty
/// multilayer core has a component above it.
pub fn layer_bounds(g: &MultilayerGraph) -> CorenessVector {
    CorenessVector::new(
        (0..g.layer_count()).map(|layer| core_numbers(g, layer).into_iter().max().unwrap_or(0)).collect(),
    )
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
    fn peel_examples() {
        let g = toy_graph();
        let all = g.vertices();
        assert_eq!(peel_core(&g, &all, &v(&[2, 0])).unwrap(), set(&g, "ABDEF"));
        assert_eq!(peel_core(&g, &all, &v(&[0, 0])).unwrap(), all);
        assert!(peel_core(&g, &all, &v(&[4, 0])).unwrap().is_empty());
        assert!(peel_core(&g, &all, &v(&[3, 2])).unwrap().is_empty());
        assert!(peel_core(&g, &all, &v(&[1])).is_err());
    }

    #[test]
    fn path_along_second_layer() {
        let g = toy_graph();
        let path = cores_path(&g, &g.vertices(), &v(&[0, 0]), 1).unwrap();
        assert_eq!(
            path,
            vec![(v(&[0, 1]), g.vertices()), (v(&[0, 2]), set(&g, "BCEF")), (v(&[0, 3]), set(&g, "BCEF"))]
        );
    }

    #[test]
    fn path_along_first_layer() {
        let g = toy_graph();
        let path = cores_path(&g, &g.vertices(), &v(&[0, 0]), 0).unwrap();
        assert_eq!(
            path,
            vec![(v(&[1, 0]), g.vertices()), (v(&[2, 0]), set(&g, "ABDEF")), (v(&[3, 0]), set(&g, "ABDE"))]
        );
    }

    #[test]
    fn path_cascades_across_layers() {
        let g = toy_graph();
        // raising layer 1 while holding layer 0 at 2: (2,2) = BEF, (2,3) empty
        let path = cores_path(&g, &g.vertices(), &v(&[2, 0]), 1).unwrap();
        assert_eq!(path, vec![(v(&[2, 1]), set(&g, "ABDEF")), (v(&[2, 2]), set(&g, "BEF"))]);
    }

    #[test]
    fn path_from_empty_set() {
        let g = toy_graph();
        assert!(cores_path(&g, &VertexSet::empty(), &v(&[0, 0]), 0).unwrap().is_empty());
    }

    #[test]
    fn maximal_vectors() {
        let g = toy_graph();
        assert_eq!(maximal_vector(&g, &set(&g, "ABDEF")).unwrap(), v(&[2, 1]));
        assert_eq!(maximal_vector(&g, &set(&g, "BCEF")).unwrap(), v(&[1, 3]));
        assert_eq!(maximal_vector(&g, &g.vertices()).unwrap(), v(&[1, 1]));
        assert!(maximal_vector(&g, &VertexSet::empty()).is_err());
    }

    #[test]
    fn single_layer_core_numbers() {
        let g = toy_graph();
        let by_label = |layer: Layer| -> Vec<(String, u32)> {
            let numbers = core_numbers(&g, layer);
            let mut out: Vec<_> = (0..6).map(|v| (g.label(v).to_owned(), numbers[v as usize])).collect();
            out.sort();
            out
        };
        let expect = |s: &[(&str, u32)]| s.iter().map(|(a, b)| (a.to_string(), *b)).collect::<Vec<_>>();
        assert_eq!(by_label(0), expect(&[("A", 3), ("B", 3), ("C", 1), ("D", 3), ("E", 3), ("F", 2)]));
        assert_eq!(by_label(1), expect(&[("A", 1), ("B", 3), ("C", 3), ("D", 1), ("E", 3), ("F", 3)]));
        assert_eq!(layer_bounds(&g), v(&[3, 3]));
    }

    #[test]
    fn highest_along_layer() {
        let g = toy_graph();
        let (top, core) = highest_along(&g, &set(&g, "BCEF"), &v(&[1, 0]), 1).unwrap();
        assert_eq!((top, core), (3, set(&g, "BCEF")));
        assert!(highest_along(&g, &g.vertices(), &v(&[0, 4]), 0).is_none());
    }
}
