//! The layer-subset maximization shared by the density, community and
//! coreness-vector objectives: `max over non-empty L' of (min_{l in L'} x_l) * |L'|^beta`.
//!
//! For a fixed size `j` the best subset is the `j` largest values, so sorting
//! once and scanning prefixes is exact. Comparisons happen in log space so
//! that large `beta` cannot overflow the choice.

use std::cmp::Ordering;

use crate::error::{argument, Result};
use crate::graph::Layer;

/// Best layer subset for one profile of per-layer values.
#[derive(Clone, Debug, PartialEq)]
pub struct LayerChoice {
    /// `min * |layers|^beta`; may be infinite when `beta` is huge.
    pub value: f64,
    /// `ln(min) + beta * ln|layers|`, `-inf` when the min is zero.
    pub log_value: f64,
    /// Attaining subset in increasing layer order; every layer when all
    /// values are zero.
    pub layers: Vec<Layer>,
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta > 0.0 {
        Ok(())
    } else {
        argument(format!("beta must be a positive finite number, got {beta}"))
    }
}

/// Orders log-space scores with a small relative tolerance so that values
/// differing only by rounding compare equal.
pub fn compare_log(a: f64, b: f64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    if a.is_finite() && b.is_finite() && (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0) {
        return Ordering::Equal;
    }
    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
}

/// Prefix scan over `values` sorted in non-increasing order; among equal
/// scores the larger subset wins.
pub fn best_prefix(values: &[f64], beta: f64) -> LayerChoice {
    let mut order: Vec<Layer> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
    let mut best: Option<(f64, usize)> = None;
    for j in 1..=order.len() {
        let min = values[order[j - 1]];
        let log = if min > 0.0 { min.ln() + beta * (j as f64).ln() } else { f64::NEG_INFINITY };
        if best.map_or(true, |(b, _)| compare_log(log, b) != Ordering::Less) {
            best = Some((log, j));
        }
    }
    let Some((log_value, j)) = best else {
        return LayerChoice { value: 0.0, log_value: f64::NEG_INFINITY, layers: Vec::new() };
    };
    let mut layers = order[..j].to_vec();
    layers.sort_unstable();
    let value = if log_value == f64::NEG_INFINITY { 0.0 } else { values[order[j - 1]] * (j as f64).powf(beta) };
    LayerChoice { value, log_value, layers }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = best_prefix(&[2.0, 2.0], 1.0);
        assert_eq!((c.value, c.layers), (4.0, vec![0, 1]));
        let c = best_prefix(&[3.0, 1.0], 1.0);
        assert_eq!((c.value, c.layers), (3.0, vec![0]));
        let c = best_prefix(&[1.0, 3.0], 1.0);
        assert_eq!((c.value, c.layers), (3.0, vec![1]));
        let c = best_prefix(&[0.0, 0.0, 0.0], 2.0);
        assert_eq!((c.value, c.layers.len()), (0.0, 3));
        assert!(best_prefix(&[], 1.0).layers.is_empty());
    }

    #[test]
    fn ties_prefer_more_layers() {
        // 2 alone versus 1 * 2^1 on both layers
        assert_eq!(best_prefix(&[2.0, 1.0], 1.0).layers, vec![0, 1]);
    }

    #[test]
    fn huge_beta_stays_ordered() {
        let c = best_prefix(&[9.0 / 6.0, 8.0 / 6.0], 2000.0);
        assert_eq!(c.layers, vec![0, 1]);
        assert!(c.value.is_infinite());
        assert!((c.log_value - ((8.0f64 / 6.0).ln() + 2000.0 * 2f64.ln())).abs() < 1e-9);
    }

    #[test]
    fn beta_validation() {
        assert!(check_beta(0.5).is_ok());
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(check_beta(bad).is_err());
        }
    }
}
