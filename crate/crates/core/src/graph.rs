//! Simple undirected graphs and the primitives every solver shares.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A simple undirected graph on vertices `0..n`, stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    VertexOutOfRange { edge: (usize, usize), n: usize },
    WeightCount { expected: usize, found: usize },
    InvalidWeight { vertex: usize, weight: f64 },
    InvalidBipartition,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop on vertex {vertex}"),
            GraphError::VertexOutOfRange { edge: (u, v), n } => {
                write!(f, "edge ({u}, {v}) has an endpoint outside 0..{n}")
            }
            GraphError::WeightCount { expected, found } => {
                write!(f, "expected {expected} weights, found {found}")
            }
            GraphError::InvalidWeight { vertex, weight } => {
                write!(
                    f,
                    "vertex {vertex} has non-positive or non-finite weight {weight}"
                )
            }
            GraphError::InvalidBipartition => {
                write!(f, "sides do not form a bipartition of the graph")
            }
        }
    }
}

impl core::error::Error for GraphError {}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a simple graph. Duplicate edges (in either orientation) collapse into one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { edge: (u, v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Ok(Graph {
            adj,
            m: twice_m / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `Some(r)` if every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == r).then_some(r)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            for v in 0..n {
                if v != u && !self.has_edge(u, v) {
                    list.push(v);
                    m += 1;
                }
            }
        }
        Graph { adj, m: m / 2 }
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }
}

/// Per-vertex weights equal to degrees. Isolated vertices get weight 0.
pub fn degree_weights(graph: &Graph) -> Vec<f64> {
    (0..graph.n()).map(|v| graph.degree(v) as f64).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    /// MIVC: weight of each vertex is its degree.
    Degree,
    Explicit,
}

/// One MWBIS problem: a graph, positive vertex weights and a budget `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedInstance {
    graph: Graph,
    weights: Vec<f64>,
    k: usize,
    mode: WeightMode,
    integral: bool,
}

impl WeightedInstance {
    /// Instance with explicit weights. Every weight must be finite and strictly positive.
    pub fn new(graph: Graph, weights: Vec<f64>, k: usize) -> Result<Self, GraphError> {
        if weights.len() != graph.n() {
            return Err(GraphError::WeightCount {
                expected: graph.n(),
                found: weights.len(),
            });
        }
        if let Some((vertex, &weight)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w > 0.0))
        {
            return Err(GraphError::InvalidWeight { vertex, weight });
        }
        let integral = weights.iter().all(|w| is_integer(*w));
        Ok(WeightedInstance {
            graph,
            weights,
            k,
            mode: WeightMode::Explicit,
            integral,
        })
    }

    /// Degree-weighted (MIVC) instance. Isolated vertices carry weight 0.
    pub fn mivc(graph: Graph, k: usize) -> Self {
        let weights = degree_weights(&graph);
        WeightedInstance {
            graph,
            weights,
            k,
            mode: WeightMode::Degree,
            integral: true,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> f64 {
        self.weights[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    /// True when every weight is an integer small enough to be summed exactly in `f64`.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn with_budget(&self, k: usize) -> Self {
        WeightedInstance { k, ..self.clone() }
    }

    /// Exact weight of `set` for integral instances.
    pub fn integral_weight(&self, set: &[usize]) -> Option<i64> {
        self.integral
            .then(|| set.iter().map(|&v| self.weights[v] as i64).sum())
    }
}

fn is_integer(w: f64) -> bool {
    w.abs() < (1u64 << 52) as f64 && w == (w as i64) as f64
}

/// Which algorithm produced a [`Solution`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Greedy,
    ColorClass,
    Truncation,
    ReductionOracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Greedy => "greedy",
            Method::ColorClass => "color",
            Method::Truncation => "truncate",
            Method::ReductionOracle => "reduction",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A budgeted independent set together with its weight.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub value: f64,
    pub method: Method,
    pub proven_optimal: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InvalidSolution {
    VertexOutOfRange(usize),
    Adjacent(usize, usize),
    OverBudget { size: usize, k: usize },
    ValueMismatch { reported: f64, recomputed: f64 },
}

impl fmt::Display for InvalidSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidSolution::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            InvalidSolution::Adjacent(u, v) => write!(f, "vertices {u} and {v} are adjacent"),
            InvalidSolution::OverBudget { size, k } => {
                write!(f, "{size} vertices chosen with budget {k}")
            }
            InvalidSolution::ValueMismatch {
                reported,
                recomputed,
            } => write!(f, "reported value {reported}, recomputed {recomputed}"),
        }
    }
}

impl core::error::Error for InvalidSolution {}

impl Solution {
    /// Sorts `vertices` and computes the value from the instance weights.
    pub fn new(
        instance: &WeightedInstance,
        mut vertices: Vec<usize>,
        method: Method,
        proven_optimal: bool,
    ) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let value = set_weight(instance, &vertices);
        Solution {
            vertices,
            value,
            method,
            proven_optimal,
        }
    }

    pub fn empty(method: Method) -> Self {
        Solution {
            vertices: Vec::new(),
            value: 0.0,
            method,
            proven_optimal: false,
        }
    }

    /// Re-checks independence, the budget and the reported value against `instance`.
    pub fn verify(&self, instance: &WeightedInstance) -> Result<(), InvalidSolution> {
        let g = instance.graph();
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n()) {
            return Err(InvalidSolution::VertexOutOfRange(v));
        }
        if let Some((u, v)) = first_adjacent_pair(g, &self.vertices) {
            return Err(InvalidSolution::Adjacent(u, v));
        }
        if self.vertices.len() > instance.k() {
            return Err(InvalidSolution::OverBudget {
                size: self.vertices.len(),
                k: instance.k(),
            });
        }
        let recomputed = set_weight(instance, &self.vertices);
        let ok = if instance.is_integral() {
            recomputed == self.value
        } else {
            (recomputed - self.value).abs() <= 1e-12 * recomputed.abs().max(1.0)
        };
        if ok {
            Ok(())
        } else {
            Err(InvalidSolution::ValueMismatch {
                reported: self.value,
                recomputed,
            })
        }
    }
}

fn first_adjacent_pair(graph: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    let mut member = vec![false; graph.n()];
    for &v in set {
        member[v] = true;
    }
    set.iter().find_map(|&u| {
        graph
            .neighbors(u)
            .iter()
            .find(|&&v| member[v])
            .map(|&v| (u.min(v), u.max(v)))
    })
}

/// True iff no edge joins two members of `set`.
pub fn is_independent(graph: &Graph, set: &[usize]) -> bool {
    first_adjacent_pair(graph, set).is_none()
}

/// Sum of the weights of the vertices in `set`.
pub fn set_weight(instance: &WeightedInstance, set: &[usize]) -> f64 {
    set.iter().map(|&v| instance.weights[v]).sum()
}

/// Number of distinct edges with at least one endpoint in `set`.
pub fn covered_edges(graph: &Graph, set: &[usize]) -> usize {
    let mut member = vec![false; graph.n()];
    for &v in set {
        member[v] = true;
    }
    let mut count = 0;
    for (u, _) in member.iter().enumerate().filter(|(_, &m)| m) {
        count += graph
            .neighbors(u)
            .iter()
            .filter(|&&v| !member[v] || u < v)
            .count();
    }
    count
}

/// A 2-coloring of the vertices with every edge crossing sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side_a: Vec<usize>,
    side_b: Vec<usize>,
    in_a: Vec<bool>,
}

impl Bipartition {
    /// Validates that `side_a` and `side_b` partition the vertices and that every edge crosses.
    pub fn from_sides(
        graph: &Graph,
        mut side_a: Vec<usize>,
        mut side_b: Vec<usize>,
    ) -> Result<Self, GraphError> {
        let n = graph.n();
        let mut seen = vec![0u8; n];
        let mut in_a = vec![false; n];
        for &v in &side_a {
            if v >= n {
                return Err(GraphError::InvalidBipartition);
            }
            seen[v] += 1;
            in_a[v] = true;
        }
        for &v in &side_b {
            if v >= n {
                return Err(GraphError::InvalidBipartition);
            }
            seen[v] += 1;
        }
        if seen.iter().any(|&c| c != 1) || graph.edges().any(|(u, v)| in_a[u] == in_a[v]) {
            return Err(GraphError::InvalidBipartition);
        }
        side_a.sort_unstable();
        side_b.sort_unstable();
        Ok(Bipartition {
            side_a,
            side_b,
            in_a,
        })
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.in_a[v]
    }

    /// Certifies the bipartition against `graph` in O(n + m).
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        self.in_a.len() == graph.n()
            && self.side_a.len() + self.side_b.len() == graph.n()
            && graph.edges().all(|(u, v)| self.in_a[u] != self.in_a[v])
    }
}

/// Witness that a graph is not bipartite. The cycle starts at its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle {
    pub cycle: Vec<usize>,
}

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "odd cycle")?;
        for (i, v) in self.cycle.iter().enumerate() {
            let sep = if i == 0 { " " } else { " - " };
            write!(f, "{sep}{v}")?;
        }
        Ok(())
    }
}

/// Breadth-first 2-coloring; each component's smallest vertex goes to side A.
pub fn bipartition(graph: &Graph) -> Result<Bipartition, OddCycle> {
    let n = graph.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(true);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap_or(true);
            for &v in graph.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return Err(odd_cycle(&parent, u, v)),
                    Some(_) => {}
                }
            }
        }
    }
    let in_a: Vec<bool> = side.into_iter().map(|s| s.unwrap_or(true)).collect();
    let side_a = (0..n).filter(|&v| in_a[v]).collect();
    let side_b = (0..n).filter(|&v| !in_a[v]).collect();
    Ok(Bipartition {
        side_a,
        side_b,
        in_a,
    })
}

fn odd_cycle(parent: &[usize], u: usize, v: usize) -> OddCycle {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    // Same-colored endpoints sit at the same BFS depth, so the paths meet at equal offsets.
    let mut common = 0;
    while common < pu.len().min(pv.len()) && pu[pu.len() - 1 - common] == pv[pv.len() - 1 - common]
    {
        common += 1;
    }
    let mut cycle: Vec<usize> = pu[..=pu.len() - common].to_vec();
    cycle.extend(pv[..pv.len() - common].iter().rev());
    normalize_cycle(cycle)
}

fn normalize_cycle(mut cycle: Vec<usize>) -> OddCycle {
    if let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
    {
        cycle.rotate_left(pos);
    }
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    OddCycle { cycle }
}

/// A proper vertex coloring, stored as its color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    pub fn from_classes(classes: Vec<Vec<usize>>) -> Self {
        Coloring { classes }
    }

    /// The two sides as color classes `[A, B]`.
    pub fn from_bipartition(bip: &Bipartition) -> Self {
        Coloring {
            classes: vec![bip.side_a.clone(), bip.side_b.clone()],
        }
    }

    /// Greedy coloring in vertex-id order; at most `Δ + 1` colors.
    pub fn natural(graph: &Graph) -> Self {
        let order: Vec<usize> = (0..graph.n()).collect();
        greedy_coloring(graph, &order)
    }

    /// Greedy coloring in reverse peeling order; at most `d + 1` colors.
    pub fn degeneracy(graph: &Graph) -> Self {
        let (mut order, _) = degeneracy_order(graph);
        order.reverse();
        greedy_coloring(graph, &order)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    /// Classes partition the vertex set and each class is independent.
    pub fn is_proper(&self, graph: &Graph) -> bool {
        let mut seen = vec![false; graph.n()];
        for class in &self.classes {
            for &v in class {
                if v >= graph.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if !is_independent(graph, class) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// First-fit coloring in the given order. `order` must be a permutation of the vertices.
pub fn greedy_coloring(graph: &Graph, order: &[usize]) -> Coloring {
    let n = graph.n();
    assert_eq!(order.len(), n, "order must list every vertex once");
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut taken: Vec<bool> = Vec::new();
    for &v in order {
        assert!(color[v] == usize::MAX, "vertex {v} repeated in order");
        taken.clear();
        taken.resize(classes.len() + 1, false);
        for &u in graph.neighbors(v) {
            if color[u] != usize::MAX {
                taken[color[u]] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).unwrap_or(classes.len());
        if c == classes.len() {
            classes.push(Vec::new());
        }
        color[v] = c;
        classes[c].push(v);
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    Coloring { classes }
}

/// Repeated minimum-degree peeling (ties to the lower id). Returns the removal order and the
/// degeneracy `d`, the largest degree seen at removal time.
pub fn degeneracy_order(graph: &Graph) -> (Vec<usize>, usize) {
    let n = graph.n();
    let mut deg: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        d = d.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &u in graph.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    (order, d)
}
