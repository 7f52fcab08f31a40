use alloc::vec::Vec;

use super::LpError;
use crate::graph::{bipartition, Graph};

/// Default cap on the number of maximal cliques before enumeration gives up.
pub const DEFAULT_CLIQUE_CAP: usize = 200_000;

/// All maximal cliques, each sorted, in lexicographic order.
///
/// Bipartite graphs short-circuit: their maximal cliques are the edges plus isolated
/// vertices. Otherwise Bron–Kerbosch with Tomita pivoting.
pub fn enumerate_maximal_cliques(graph: &Graph, cap: usize) -> Result<Vec<Vec<usize>>, LpError> {
    let mut cliques = Vec::new();
    if bipartition(graph).is_ok() {
        for v in 0..graph.n() {
            if graph.degree(v) == 0 {
                cliques.push(alloc::vec![v]);
            }
            for &u in graph.neighbors(v).iter().filter(|&&u| u > v) {
                cliques.push(alloc::vec![v, u]);
            }
        }
        if cliques.len() > cap {
            return Err(LpError::CliqueCap { cap });
        }
    } else {
        let mut enumerator = BronKerbosch {
            graph,
            cap,
            cliques: Vec::new(),
        };
        let all: Vec<usize> = (0..graph.n()).collect();
        enumerator.expand(&mut Vec::new(), all, Vec::new())?;
        cliques = enumerator.cliques;
        for c in &mut cliques {
            c.sort_unstable();
        }
    }
    cliques.sort();
    Ok(cliques)
}

struct BronKerbosch<'a> {
    graph: &'a Graph,
    cap: usize,
    cliques: Vec<Vec<usize>>,
}

impl BronKerbosch<'_> {
    fn expand(
        &mut self,
        current: &mut Vec<usize>,
        mut candidates: Vec<usize>,
        mut excluded: Vec<usize>,
    ) -> Result<(), LpError> {
        if candidates.is_empty() {
            if excluded.is_empty() {
                if self.cliques.len() == self.cap {
                    return Err(LpError::CliqueCap { cap: self.cap });
                }
                self.cliques.push(current.clone());
            }
            return Ok(());
        }
        // pivot: the vertex of P ∪ X with the most neighbours in P
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .copied()
            .max_by_key(|&u| intersect(self.graph.neighbors(u), &candidates).len())
            .expect("candidates is non-empty");
        let branch: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&v| !self.graph.has_edge(pivot, v))
            .collect();
        for v in branch {
            let nv = self.graph.neighbors(v);
            current.push(v);
            self.expand(
                current,
                intersect(nv, &candidates),
                intersect(nv, &excluded),
            )?;
            current.pop();
            candidates.retain(|&u| u != v);
            let at = excluded.partition_point(|&u| u < v);
            excluded.insert(at, v);
        }
        Ok(())
    }
}

/// Intersection of two sorted lists.
fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
