use std::fmt;

use crate::graph::Layer;

/// Per-layer minimum-degree requirements `k = [k_l]` identifying a core.
///
/// Ordering is lexicographic; the lattice order is [`dominates`](Self::dominates).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorenessVector(Vec<u32>);

impl CorenessVector {
    pub fn new(components: Vec<u32>) -> Self {
        CorenessVector(components)
    }

    pub fn zeros(layers: usize) -> Self {
        CorenessVector(vec![0; layers])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, layer: Layer) -> u32 {
        self.0[layer]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Copy with component `layer` replaced by `value`.
    pub fn with(&self, layer: Layer, value: u32) -> Self {
        let mut out = self.clone();
        out.0[layer] = value;
        out
    }

    /// Lattice level: the sum of the components.
    pub fn level(&self) -> u64 {
        self.0.iter().map(|&k| k as u64).sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&k| k > 0).count()
    }

    /// `self >= other` componentwise.
    pub fn dominates(&self, other: &CorenessVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Componentwise `>=` with at least one strict inequality.
    pub fn strictly_dominates(&self, other: &CorenessVector) -> bool {
        self.dominates(other) && self != other
    }

    pub fn componentwise_max(&self, other: &CorenessVector) -> CorenessVector {
        CorenessVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// All vectors `v` with `lo <= v <= hi`, in lexicographic order.
    pub fn box_between(lo: &CorenessVector, hi: &CorenessVector) -> BoxIter {
        debug_assert!(hi.dominates(lo));
        BoxIter { lo: lo.0.clone(), hi: hi.0.clone(), next: Some(lo.0.clone()) }
    }
}

impl From<Vec<u32>> for CorenessVector {
    fn from(v: Vec<u32>) -> Self {
        CorenessVector(v)
    }
}

impl fmt::Display for CorenessVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// Odometer over a hyper-rectangle of coreness vectors.
pub struct BoxIter {
    lo: Vec<u32>,
    hi: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for BoxIter {
    type Item = CorenessVector;

    fn next(&mut self) -> Option<CorenessVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.hi[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = self.lo[i];
        }
        Some(CorenessVector(current))
    }
}
