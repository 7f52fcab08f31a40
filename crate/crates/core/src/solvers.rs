//! Exact and approximate MWBIS solvers.

use alloc::vec;
use alloc::vec::Vec;
use core::num::NonZeroU64;
use core::time::Duration;

use crate::graph::{Bipartition, Coloring, Graph, Method, Solution, WeightedInstance};

/// Limits for [`exact_mwbis`]. The default is unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_limit: Option<NonZeroU64>,
    pub time_limit: Option<Duration>,
}

impl SearchConfig {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_node_limit(mut self, nodes: NonZeroU64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    /// # Panics
    /// If `limit` is zero.
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        assert!(!limit.is_zero(), "time limit must be positive");
        self.time_limit = Some(limit);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitHit {
    Nodes,
    Time,
}

/// Result of an exact search, with the number of branch-and-bound nodes visited.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactOutcome {
    pub solution: Solution,
    pub nodes: u64,
    pub limit_hit: Option<LimitHit>,
}

/// Exact MWBIS by branch and bound. Stops early with `proven_optimal = false` if a limit in
/// `config` is reached.
///
/// Wall-clock limits need the `std` feature; without it use [`exact_mwbis_with_clock`].
pub fn exact_mwbis(instance: &WeightedInstance, config: &SearchConfig) -> Solution {
    #[cfg(feature = "std")]
    {
        let start = std::time::Instant::now();
        exact_mwbis_with_clock(instance, config, &|| start.elapsed()).solution
    }
    #[cfg(not(feature = "std"))]
    {
        exact_mwbis_with_clock(instance, config, &|| Duration::ZERO).solution
    }
}

/// Exact search with a caller-supplied clock returning elapsed time since the start.
///
/// Vertices are scanned in non-increasing weight order (ties to the lower id). Each node
/// branches on the heaviest remaining candidate: take it (its neighbours leave the candidate
/// set) or drop it. A node is pruned when its value plus the top `remaining budget` candidate
/// weights cannot beat the incumbent. Zero-weight vertices are never branched on.
pub fn exact_mwbis_with_clock(
    instance: &WeightedInstance,
    config: &SearchConfig,
    clock: &dyn Fn() -> Duration,
) -> ExactOutcome {
    let graph = instance.graph();
    let mut order: Vec<usize> = (0..graph.n())
        .filter(|&v| instance.weight(v) > 0.0)
        .collect();
    order.sort_by(|&a, &b| {
        instance
            .weight(b)
            .total_cmp(&instance.weight(a))
            .then(a.cmp(&b))
    });

    let mut search = Search {
        graph,
        weights: instance.weights(),
        order,
        blocked: vec![0; graph.n()],
        chosen: Vec::new(),
        best: Vec::new(),
        best_value: 0.0,
        nodes: 0,
        config,
        clock,
        limit_hit: None,
    };
    search.seed_incumbent(instance.k());
    search.descend(0, instance.k(), 0.0);

    let proven = search.limit_hit.is_none();
    let solution = Solution::new(instance, search.best, Method::Exact, proven);
    ExactOutcome {
        solution,
        nodes: search.nodes,
        limit_hit: search.limit_hit,
    }
}

struct Search<'a> {
    graph: &'a Graph,
    weights: &'a [f64],
    order: Vec<usize>,
    /// Number of chosen neighbours per vertex; a vertex is a candidate while this is zero.
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    best_value: f64,
    nodes: u64,
    config: &'a SearchConfig,
    clock: &'a dyn Fn() -> Duration,
    limit_hit: Option<LimitHit>,
}

impl Search<'_> {
    /// Greedy by weight, to start with a good incumbent.
    fn seed_incumbent(&mut self, k: usize) {
        let mut blocked = vec![false; self.graph.n()];
        let mut value = 0.0;
        for &v in &self.order {
            if self.best.len() == k {
                break;
            }
            if !blocked[v] {
                self.best.push(v);
                value += self.weights[v];
                for &u in self.graph.neighbors(v) {
                    blocked[u] = true;
                }
            }
        }
        self.best_value = value;
    }

    fn out_of_resources(&mut self) -> bool {
        if self.limit_hit.is_some() {
            return true;
        }
        self.nodes += 1;
        if let Some(limit) = self.config.node_limit {
            if self.nodes > limit.get() {
                self.limit_hit = Some(LimitHit::Nodes);
            }
        }
        if let Some(limit) = self.config.time_limit {
            if self.nodes % 1024 == 1 && (self.clock)() >= limit {
                self.limit_hit = Some(LimitHit::Time);
            }
        }
        self.limit_hit.is_some()
    }

    fn descend(&mut self, pos: usize, budget: usize, value: f64) {
        if self.out_of_resources() {
            return;
        }
        if value > self.best_value {
            self.best_value = value;
            self.best.clone_from(&self.chosen);
        }
        if budget == 0 {
            return;
        }

        let mut first = None;
        let mut bound = value;
        let mut counted = 0;
        for (i, &v) in self.order.iter().enumerate().skip(pos) {
            if self.blocked[v] == 0 {
                first.get_or_insert(i);
                bound += self.weights[v];
                counted += 1;
                if counted == budget {
                    break;
                }
            }
        }
        let Some(i) = first else { return };
        if bound <= self.best_value {
            return;
        }

        let v = self.order[i];
        self.chosen.push(v);
        for &u in self.graph.neighbors(v) {
            self.blocked[u] += 1;
        }
        self.descend(i + 1, budget - 1, value + self.weights[v]);
        for &u in self.graph.neighbors(v) {
            self.blocked[u] -= 1;
        }
        self.chosen.pop();

        self.descend(i + 1, budget, value);
    }
}

/// The `k` heaviest vertices of `set` (ties to the lower id), or all of `set` if it is smaller.
pub fn top_k(weights: &[f64], set: &[usize], k: usize) -> Vec<usize> {
    let heavier_first = |a: &usize, b: &usize| weights[*b].total_cmp(&weights[*a]).then(a.cmp(b));
    let mut picked = set.to_vec();
    if k == 0 {
        picked.clear();
    } else if k < picked.len() {
        picked.select_nth_unstable_by(k - 1, heavier_first);
        picked.truncate(k);
    }
    picked.sort_unstable();
    picked
}

/// The bipartite 1/2-approximation: the heavier of the top-`k` sets of the two sides,
/// preferring side A on ties. Linear-time selection per side.
pub fn greedy_bipartite(instance: &WeightedInstance, bip: &Bipartition) -> Solution {
    debug_assert!(bip.is_valid_for(instance.graph()));
    let k = instance.k();
    let s_a = Solution::new(
        instance,
        top_k(instance.weights(), bip.side_a(), k),
        Method::Greedy,
        false,
    );
    let s_b = Solution::new(
        instance,
        top_k(instance.weights(), bip.side_b(), k),
        Method::Greedy,
        false,
    );
    if s_a.value >= s_b.value {
        s_a
    } else {
        s_b
    }
}

/// Top-`k` set of every color class; returns the heaviest (earliest class on ties).
/// Guarantees at least `OPT / p` for `p` colors.
pub fn color_class_approx(instance: &WeightedInstance, coloring: &Coloring) -> Solution {
    debug_assert!(coloring.is_proper(instance.graph()));
    let mut best = Solution::empty(Method::ColorClass);
    let mut first = true;
    for class in coloring.classes() {
        let candidate = Solution::new(
            instance,
            top_k(instance.weights(), class, instance.k()),
            Method::ColorClass,
            false,
        );
        if first || candidate.value > best.value {
            best = candidate;
            first = false;
        }
    }
    best
}

/// Maximum weight independent set of a bipartite graph (no budget), as the complement of a
/// minimum weight vertex cover read off a minimum s-t cut.
///
/// Network: source to each A vertex with capacity w(a), each B vertex to sink with capacity
/// w(b), and an uncapacitated arc a -> b for every edge. Max flow by shortest augmenting paths.
pub fn mwis_bipartite_exact(graph: &Graph, weights: &[f64], bip: &Bipartition) -> Vec<usize> {
    debug_assert!(bip.is_valid_for(graph));
    let n = graph.n();
    let source = n;
    let sink = n + 1;
    let mut net = FlowNetwork::new(n + 2);
    for &a in bip.side_a() {
        net.add_arc(source, a, weights[a]);
        for &b in graph.neighbors(a) {
            net.add_arc(a, b, f64::INFINITY);
        }
    }
    for &b in bip.side_b() {
        net.add_arc(b, sink, weights[b]);
    }
    let scale = weights.iter().fold(1.0f64, |acc, w| acc.max(w.abs()));
    let eps = 1e-12 * scale;
    net.max_flow(source, sink, eps);
    let reach = net.reachable(source, eps);
    (0..n)
        .filter(|&v| if bip.in_a(v) { reach[v] } else { !reach[v] })
        .collect()
}

struct Arc {
    to: usize,
    cap: f64,
    rev: usize,
}

struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: f64) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            cap,
            rev: rev_from,
        });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0.0,
            rev: rev_to,
        });
    }

    fn max_flow(&mut self, source: usize, sink: usize, eps: f64) -> f64 {
        let nodes = self.arcs.len();
        let mut total = 0.0;
        loop {
            // BFS for a shortest augmenting path; pred holds (node, arc index).
            let mut pred = vec![None; nodes];
            let mut queue = alloc::collections::VecDeque::from([source]);
            let mut visited = vec![false; nodes];
            visited[source] = true;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (idx, arc) in self.arcs[u].iter().enumerate() {
                    if arc.cap > eps && !visited[arc.to] {
                        visited[arc.to] = true;
                        pred[arc.to] = Some((u, idx));
                        queue.push_back(arc.to);
                    }
                }
            }
            if !visited[sink] {
                return total;
            }
            let mut bottleneck = f64::INFINITY;
            let mut v = sink;
            while let Some((u, idx)) = pred[v] {
                bottleneck = bottleneck.min(self.arcs[u][idx].cap);
                v = u;
            }
            let mut v = sink;
            while let Some((u, idx)) = pred[v] {
                self.arcs[u][idx].cap -= bottleneck;
                let rev = self.arcs[u][idx].rev;
                self.arcs[v][rev].cap += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }

    fn reachable(&self, source: usize, eps: f64) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for arc in &self.arcs[u] {
                if arc.cap > eps && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}

/// Keeps the `k` heaviest members of an independent set (ties to the lower id). The result
/// weighs at least `k / |set|` of the input.
pub fn truncate_to_budget(set: &[usize], weights: &[f64], k: usize) -> Solution {
    let vertices = top_k(weights, set, k);
    let value = vertices.iter().map(|&v| weights[v]).sum();
    Solution {
        vertices,
        value,
        method: Method::Truncation,
        proven_optimal: false,
    }
}

/// Exact bipartite MWIS followed by budget truncation: a `k / n` approximation.
pub fn mwis_truncation(instance: &WeightedInstance, bip: &Bipartition) -> Solution {
    let mwis = mwis_bipartite_exact(instance.graph(), instance.weights(), bip);
    truncate_to_budget(&mwis, instance.weights(), instance.k())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, is_independent};

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn exact(inst: &WeightedInstance) -> Solution {
        exact_mwbis(inst, &SearchConfig::unlimited())
    }

    #[test]
    fn exact_on_stars() {
        let s1 = exact(&WeightedInstance::mivc(star(3), 1));
        assert_eq!((s1.vertices.as_slice(), s1.value), (&[0][..], 3.0));
        assert!(s1.proven_optimal);
        // brute force over all subsets of size <= 2: {0} -> 3, any two leaves -> 2
        let s2 = exact(&WeightedInstance::mivc(star(3), 2));
        assert_eq!(s2.value, 3.0);
    }

    #[test]
    fn exact_with_zero_budget_is_empty() {
        let s = exact(&WeightedInstance::mivc(star(3), 0));
        assert!(s.vertices.is_empty());
        assert_eq!(s.value, 0.0);
        assert!(s.proven_optimal);
    }

    #[test]
    fn exact_skips_isolated_vertices() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let s = exact(&WeightedInstance::mivc(g, 3));
        assert_eq!(s.value, 1.0);
        assert_eq!(s.vertices.len(), 1);
    }

    #[test]
    fn node_limit_reports_unproven() {
        let g = Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let inst =
            WeightedInstance::new(g, vec![1.0, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7], 4).unwrap();
        let cfg = SearchConfig::unlimited().with_node_limit(NonZeroU64::new(2).unwrap());
        let out = exact_mwbis_with_clock(&inst, &cfg, &|| Duration::ZERO);
        assert_eq!(out.limit_hit, Some(LimitHit::Nodes));
        assert!(!out.solution.proven_optimal);
        out.solution.verify(&inst).unwrap();
    }

    #[test]
    fn time_limit_uses_clock() {
        let g = Graph::empty(3000);
        let weights: Vec<f64> = (0..3000).map(|i| 1.0 + i as f64).collect();
        let inst = WeightedInstance::new(g, weights, 1500).unwrap();
        let cfg = SearchConfig::unlimited().with_time_limit(Duration::from_millis(1));
        let out = exact_mwbis_with_clock(&inst, &cfg, &|| Duration::from_secs(1));
        assert_eq!(out.limit_hit, Some(LimitHit::Time));
        assert!(!out.solution.proven_optimal);
        // the greedy incumbent is still returned
        assert_eq!(out.solution.vertices.len(), 1500);
        out.solution.verify(&inst).unwrap();
    }

    #[test]
    fn greedy_single_edge_and_tie() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let inst = WeightedInstance::mivc(g.clone(), 1);
        let bip = bipartition(&g).unwrap();
        let s = greedy_bipartite(&inst, &bip);
        assert_eq!(s.value, 1.0);
        assert_eq!(s.vertices, vec![0]);
    }

    #[test]
    fn greedy_takes_whole_side_when_budget_exceeds() {
        let g = star(3);
        let inst = WeightedInstance::mivc(g.clone(), 10);
        let s = greedy_bipartite(&inst, &bipartition(&g).unwrap());
        // side A = {0} (weight 3), side B = leaves (weight 3): tie goes to A
        assert_eq!(s.vertices, vec![0]);
        assert_eq!(s.value, 3.0);
    }

    #[test]
    fn color_class_small_cases() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = WeightedInstance::mivc(tri.clone(), 1);
        assert_eq!(
            color_class_approx(&inst, &Coloring::natural(&tri)).value,
            2.0
        );
        let inst = WeightedInstance::mivc(p3(), 1);
        assert_eq!(
            color_class_approx(&inst, &Coloring::degeneracy(&p3())).value,
            2.0
        );
    }

    #[test]
    fn color_class_with_bipartition_equals_greedy() {
        let g = Graph::from_edges(6, &[(0, 3), (0, 4), (1, 4), (2, 5), (1, 5)]).unwrap();
        let bip = bipartition(&g).unwrap();
        for k in 1..=6 {
            let inst =
                WeightedInstance::new(g.clone(), vec![2.0, 1.0, 4.0, 3.0, 3.0, 1.5], k).unwrap();
            let a = greedy_bipartite(&inst, &bip);
            let mut b = color_class_approx(&inst, &Coloring::from_bipartition(&bip));
            b.method = Method::Greedy;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn mwis_small_bipartite() {
        let g = p3();
        let bip = bipartition(&g).unwrap();
        assert_eq!(mwis_bipartite_exact(&g, &[1.0, 5.0, 1.0], &bip), vec![1]);
        let e = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let bip = bipartition(&e).unwrap();
        assert_eq!(mwis_bipartite_exact(&e, &[2.0, 3.0], &bip), vec![1]);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let bip = bipartition(&c4).unwrap();
        let s = mwis_bipartite_exact(&c4, &[1.0; 4], &bip);
        assert_eq!(s.len(), 2);
        assert!(is_independent(&c4, &s));
    }

    #[test]
    fn truncation() {
        let w = [5.0, 3.0, 1.0];
        let s = truncate_to_budget(&[0, 1, 2], &w, 2);
        assert_eq!((s.vertices, s.value), (vec![0, 1], 8.0));
        let s = truncate_to_budget(&[0, 2], &w, 5);
        assert_eq!((s.vertices, s.value), (vec![0, 2], 6.0));
        let g = p3();
        let inst = WeightedInstance::new(g.clone(), vec![1.0, 5.0, 1.0], 1).unwrap();
        let s = mwis_truncation(&inst, &bipartition(&g).unwrap());
        assert_eq!(s.value, 5.0);
    }

    #[test]
    fn truncation_ties_prefer_lower_id() {
        let s = truncate_to_budget(&[4, 1, 3], &[0.0, 2.0, 0.0, 2.0, 2.0], 2);
        assert_eq!(s.vertices, vec![1, 3]);
    }
}
