//! Reduction from k-CLIQUE on `(n-4)`-regular graphs to decision MIVC on bipartite graphs.
//!
//! From an `r`-regular source `G` (`r = n - 4`, `n > 11`) with edges `e_1..e_m` the host `H`
//! has one vertex `a_i` per edge, one vertex `b_j` per source vertex, and `r - 3` pendants
//! `p_{i,j}` hanging from each `a_i`; `a_i b_j` is an edge when `e_i` is incident on `v_j`.
//! `G` has a k-clique iff `H` has `k + x` independent vertices covering at least
//! `kr + x(r-1)` edges, where `x = m - (kr - C(k,2))`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{covered_edges, is_independent, Graph, Method, Solution, WeightedInstance};

/// Largest source vertex count for the `2^n` enumeration in [`exact_mivc_reduction`].
pub const MAX_ENUMERATION_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq)]
pub enum ReductionError {
    TooFewVertices {
        n: usize,
    },
    NotRegular {
        expected: usize,
    },
    CliqueSizeOutOfRange {
        k: usize,
        n: usize,
    },
    OddDegreeSum {
        n: usize,
    },
    NotAClique,
    TooLargeForEnumeration {
        n: usize,
    },
    /// The constructed witness for a found clique failed its checks.
    WitnessFailed,
    Mismatch(EquivalenceReport),
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::TooFewVertices { n } => {
                write!(f, "source must have more than 11 vertices, got {n}")
            }
            ReductionError::NotRegular { expected } => {
                write!(f, "source must be {expected}-regular (n - 4)")
            }
            ReductionError::CliqueSizeOutOfRange { k, n } => {
                write!(
                    f,
                    "clique size must satisfy 1 <= k < n/2, got k = {k} with n = {n}"
                )
            }
            ReductionError::OddDegreeSum { n } => {
                write!(
                    f,
                    "no (n-4)-regular graph exists on n = {n} vertices (odd degree sum)"
                )
            }
            ReductionError::NotAClique => write!(f, "vertex set is not a k-clique of the source"),
            ReductionError::TooLargeForEnumeration { n } => write!(
                f,
                "{n} source vertices is beyond the 2^n oracle (max {MAX_ENUMERATION_VERTICES}); \
                 use the general exact solver"
            ),
            ReductionError::WitnessFailed => {
                write!(f, "clique witness is not an independent covering set")
            }
            ReductionError::Mismatch(r) => write!(
                f,
                "equivalence violated: clique_found = {}, optimum {} vs target {}",
                r.clique_found, r.mivc_opt, r.target
            ),
        }
    }
}

impl core::error::Error for ReductionError {}

/// The bipartite host built from a regular source graph.
///
/// Host ids: `a_i = i` for edge index `i < m`, then `b_j = m + j`, then pendants
/// `p_{i,j} = m + n + i(r-3) + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionInstance {
    pub source: Graph,
    pub k: usize,
    pub r: usize,
    /// Source edges in index order; `a_i` stands for `source_edges[i]`.
    pub source_edges: Vec<(usize, usize)>,
    pub host: Graph,
    pub x: u64,
    pub target: u64,
}

impl ReductionInstance {
    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn m(&self) -> usize {
        self.source_edges.len()
    }

    pub fn a_of_edge(&self, i: usize) -> usize {
        i
    }

    pub fn b_of_vertex(&self, j: usize) -> usize {
        self.m() + j
    }

    pub fn pendant(&self, i: usize, j: usize) -> usize {
        self.m() + self.n() + i * (self.r - 3) + j
    }

    /// Budget of the decision question, `k + x`.
    pub fn budget(&self) -> usize {
        self.k + self.x as usize
    }

    /// Degree spectrum, part sizes and incidence structure of the host.
    pub fn check_invariants(&self) -> bool {
        let (n, m, r) = (self.n(), self.m(), self.r);
        let h = &self.host;
        if h.n() != m + n + m * (r - 3) || h.m() != 2 * m + m * (r - 3) {
            return false;
        }
        let degrees_ok = (0..m).all(|i| h.degree(self.a_of_edge(i)) == r - 1)
            && (0..n).all(|j| h.degree(self.b_of_vertex(j)) == r)
            && (m + n..h.n()).all(|p| h.degree(p) == 1);
        let incidence_ok = self.source_edges.iter().enumerate().all(|(i, &(u, v))| {
            let a = self.a_of_edge(i);
            h.has_edge(a, self.b_of_vertex(u))
                && h.has_edge(a, self.b_of_vertex(v))
                && (0..r - 3).all(|j| h.has_edge(a, self.pendant(i, j)))
        });
        let (x, target) = (self.x, self.target);
        degrees_ok && incidence_ok && coverage_target(n, self.k) == Ok((x, target))
    }
}

/// `x = m - (kr - C(k,2))` and `target = kr + x(r-1)` with `r = n - 4`, `m = nr/2`.
pub fn coverage_target(n: usize, k: usize) -> Result<(u64, u64), ReductionError> {
    if n <= 11 {
        return Err(ReductionError::TooFewVertices { n });
    }
    if k == 0 || 2 * k >= n {
        return Err(ReductionError::CliqueSizeOutOfRange { k, n });
    }
    let (n, k) = (n as u64, k as u64);
    let r = n - 4;
    if (n * r) % 2 == 1 {
        return Err(ReductionError::OddDegreeSum { n: n as usize });
    }
    let m = n * r / 2;
    let x = m - (k * r - k * (k - 1) / 2);
    Ok((x, k * r + x * (r - 1)))
}

/// Builds the bipartite host for source `g` and clique size `k`.
pub fn construct_bipartite(g: &Graph, k: usize) -> Result<ReductionInstance, ReductionError> {
    let n = g.n();
    let (x, target) = coverage_target(n, k)?;
    let r = n - 4;
    if g.regular_degree() != Some(r) {
        return Err(ReductionError::NotRegular { expected: r });
    }
    let source_edges: Vec<(usize, usize)> = g.edges().collect();
    let m = source_edges.len();
    let pendants = r - 3;
    let mut edges = Vec::with_capacity(m * (2 + pendants));
    for (i, &(u, v)) in source_edges.iter().enumerate() {
        edges.push((i, m + u));
        edges.push((i, m + v));
        for j in 0..pendants {
            edges.push((i, m + n + i * pendants + j));
        }
    }
    let host = Graph::from_edges(m + n + m * pendants, &edges)
        .expect("host ids are in range by construction");
    Ok(ReductionInstance {
        source: g.clone(),
        k,
        r,
        source_edges,
        host,
        x,
        target,
    })
}

/// Maps a k-clique of the source to `{a_i : e_i misses the clique} ∪ {b_j : v_j in clique}`.
pub fn clique_to_solution(
    ri: &ReductionInstance,
    clique: &[usize],
) -> Result<Vec<usize>, ReductionError> {
    let n = ri.n();
    let mut member = vec![false; n];
    for &v in clique {
        if v >= n || member[v] {
            return Err(ReductionError::NotAClique);
        }
        member[v] = true;
    }
    if clique.len() != ri.k || !ri.source.is_clique(clique) {
        return Err(ReductionError::NotAClique);
    }
    let mut t: Vec<usize> = ri
        .source_edges
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| !member[u] && !member[v])
        .map(|(i, _)| ri.a_of_edge(i))
        .collect();
    t.extend(clique.iter().map(|&j| ri.b_of_vertex(j)));
    t.sort_unstable();
    Ok(t)
}

/// Exact MIVC optimum of the host for any `budget`, by enumerating every subset `S` of the
/// b-vertices.
///
/// For a fixed `S` the rest is forced: the usable a-vertices are those whose edge misses `S`
/// (degree `r-1` each, mutually independent) and pendants of unchosen a-vertices (degree 1
/// each). Only the number `t` of a-vertices matters, and every `t` is tried.
pub fn exact_mivc_reduction(
    ri: &ReductionInstance,
    budget: usize,
) -> Result<Solution, ReductionError> {
    let (n, m, r) = (ri.n(), ri.m(), ri.r);
    if n > MAX_ENUMERATION_VERTICES {
        return Err(ReductionError::TooLargeForEnumeration { n });
    }
    let edge_masks: Vec<u32> = ri
        .source_edges
        .iter()
        .map(|&(u, v)| (1 << u) | (1 << v))
        .collect();

    let mut best: Option<(u64, u32, usize, usize)> = None;
    for mask in 0u32..(1 << n) {
        let chosen_b = mask.count_ones() as usize;
        if chosen_b > budget {
            continue;
        }
        let free_a = edge_masks.iter().filter(|&&em| em & mask == 0).count();
        let left = budget - chosen_b;
        for t in 0..=free_a.min(left) {
            let pend = (left - t).min((m - t) * (r - 3));
            let value = (chosen_b * r + t * (r - 1) + pend) as u64;
            if best.is_none_or(|(v, ..)| value > v) {
                best = Some((value, mask, t, pend));
            }
        }
    }
    let (_, mask, t, pend) = best.expect("the empty subset is always considered");

    let mut vertices: Vec<usize> = (0..n)
        .filter(|&j| mask & (1 << j) != 0)
        .map(|j| ri.b_of_vertex(j))
        .collect();
    let mut used_a = vec![false; m];
    for (i, _) in edge_masks
        .iter()
        .enumerate()
        .filter(|(_, &em)| em & mask == 0)
        .take(t)
    {
        used_a[i] = true;
        vertices.push(ri.a_of_edge(i));
    }
    vertices.extend(
        (0..m)
            .filter(|&i| !used_a[i])
            .flat_map(|i| (0..r - 3).map(move |j| (i, j)))
            .take(pend)
            .map(|(i, j)| ri.pendant(i, j)),
    );
    let instance = WeightedInstance::mivc(ri.host.clone(), budget);
    Ok(Solution::new(
        &instance,
        vertices,
        Method::ReductionOracle,
        true,
    ))
}

/// Some k-clique of `g`, if one exists. Extends cliques in increasing id order over vertices
/// of degree at least `k - 1`, pruning when too few candidates remain.
pub fn has_k_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) + 1 >= k).collect();
    let mut current = Vec::with_capacity(k);
    extend_clique(g, k, &mut current, &candidates).then_some(current)
}

fn extend_clique(g: &Graph, k: usize, current: &mut Vec<usize>, candidates: &[usize]) -> bool {
    if current.len() == k {
        return true;
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - i < k {
            return false;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(v, u))
            .collect();
        if current.len() + 1 + next.len() < k {
            continue;
        }
        current.push(v);
        if extend_clique(g, k, current, &next) {
            return true;
        }
        current.pop();
    }
    false
}

/// Outcome of checking one source graph against both sides of the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub m: usize,
    pub x: u64,
    pub target: u64,
    pub clique_found: bool,
    pub mivc_opt: u64,
    pub equivalent: bool,
}

/// Decides k-clique by search and the MIVC question by the specialised oracle, and checks
/// that they agree. A found clique is also mapped through [`clique_to_solution`] and the
/// witness must be independent with size `k + x` and coverage exactly the target.
pub fn verify_equivalence(g: &Graph, k: usize) -> Result<EquivalenceReport, ReductionError> {
    let ri = construct_bipartite(g, k)?;
    let clique = has_k_clique(g, k);
    let opt = exact_mivc_reduction(&ri, ri.budget())?;
    let mivc_opt = opt.value as u64;
    let report = EquivalenceReport {
        n: ri.n(),
        k,
        r: ri.r,
        m: ri.m(),
        x: ri.x,
        target: ri.target,
        clique_found: clique.is_some(),
        mivc_opt,
        equivalent: clique.is_some() == (mivc_opt >= ri.target),
    };
    if let Some(c) = &clique {
        let t = clique_to_solution(&ri, c)?;
        let witness_ok = t.len() == ri.budget()
            && is_independent(&ri.host, &t)
            && covered_edges(&ri.host, &t) as u64 == ri.target;
        if !witness_ok {
            return Err(ReductionError::WitnessFailed);
        }
    }
    if report.equivalent {
        Ok(report)
    } else {
        Err(ReductionError::Mismatch(report))
    }
}
