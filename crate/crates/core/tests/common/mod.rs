//! Brute-force oracles, independent of the solvers under test.

#![allow(dead_code)]

use mwbis_core::{Graph, WeightedInstance};

pub fn independent_mask(g: &Graph, mask: u32) -> bool {
    g.edges()
        .all(|(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0)
}

fn mask_weight(weights: &[f64], mask: u32) -> f64 {
    (0..weights.len())
        .filter(|&v| mask & (1 << v) != 0)
        .map(|v| weights[v])
        .sum()
}

/// Heaviest independent set of at most `k` vertices, by scanning all `2^n` subsets.
pub fn naive_mwbis(instance: &WeightedInstance) -> f64 {
    let g = instance.graph();
    assert!(g.n() <= 20);
    (0u32..1 << g.n())
        .filter(|m| m.count_ones() as usize <= instance.k() && independent_mask(g, *m))
        .map(|m| mask_weight(instance.weights(), m))
        .fold(0.0, f64::max)
}

/// Heaviest independent set with no cardinality cap.
pub fn brute_mwis(g: &Graph, weights: &[f64]) -> f64 {
    assert!(g.n() <= 20);
    (0u32..1 << g.n())
        .filter(|m| independent_mask(g, *m))
        .map(|m| mask_weight(weights, m))
        .fold(0.0, f64::max)
}

/// Whether any `k`-subset of vertices is pairwise adjacent.
pub fn brute_has_clique(g: &Graph, k: usize) -> bool {
    assert!(g.n() <= 20);
    (0u32..1 << g.n())
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| m & (1 << v) != 0).collect();
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
}

/// Edges touching `set`, counted directly from the edge list.
pub fn brute_coverage(g: &Graph, set: &[usize]) -> usize {
    g.edges()
        .filter(|(u, v)| set.contains(u) || set.contains(v))
        .count()
}

/// Values agree exactly for integral weights, to a relative 1e-9 otherwise.
pub fn same_value(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}
