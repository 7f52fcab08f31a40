//! Instance families: the greedy tight example, the integrality-gap example, random regular
//! graphs (optionally with a planted clique) and random bipartite instances.
//!
//! Seeded families use ChaCha8 seeded with `seed_from_u64`; independent instances drawn from
//! one seed use separate ChaCha streams (see [`seeded_rng`]).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Bipartition, Graph, GraphError, WeightedInstance};

/// Restart cap for stub pairing.
pub const PAIRING_RESTARTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub enum GenError {
    InvalidParameter {
        family: &'static str,
        reason: &'static str,
    },
    RetriesExhausted {
        attempts: usize,
    },
    Graph(GraphError),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::InvalidParameter { family, reason } => write!(f, "{family}: {reason}"),
            GenError::RetriesExhausted { attempts } => {
                write!(
                    f,
                    "no simple graph after {attempts} pairing attempts; try another seed"
                )
            }
            GenError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GenError {}

impl From<GraphError> for GenError {
    fn from(e: GraphError) -> Self {
        GenError::Graph(e)
    }
}

/// ChaCha8 generator for instance `stream` of the corpus identified by `seed`.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WeightSpec {
    Degree,
    /// Uniform in `[lo, hi)`, or exactly `lo` when the two are equal.
    Uniform {
        lo: f64,
        hi: f64,
    },
}

/// A generator family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GenSpec {
    Tight {
        k: usize,
        x: usize,
    },
    Gap {
        k: usize,
    },
    Regular {
        n: usize,
        r: usize,
        seed: u64,
    },
    Bipartite {
        n_a: usize,
        n_b: usize,
        edge_prob: f64,
        seed: u64,
        stream: u64,
        weights: WeightSpec,
    },
}

/// Output of [`GenSpec::generate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub instance: WeightedInstance,
    pub bipartition: Option<Bipartition>,
}

impl GenSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Tight { .. } => "tight",
            GenSpec::Gap { .. } => "gap",
            GenSpec::Regular { .. } => "regular",
            GenSpec::Bipartite { .. } => "bipartite",
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let bad = |reason| {
            Err(GenError::InvalidParameter {
                family: self.family(),
                reason,
            })
        };
        match *self {
            GenSpec::Tight { k, x } => {
                if k < 2 || k % 2 == 1 {
                    return bad("k must be even and at least 2");
                }
                if x < 2 {
                    return bad("x must be at least 2");
                }
            }
            GenSpec::Gap { k } => {
                if k < 2 {
                    return bad("k must be at least 2");
                }
            }
            GenSpec::Regular { n, r, .. } => {
                if r >= n.max(1) {
                    return bad("degree must be below the vertex count");
                }
                if (n * r) % 2 == 1 {
                    return bad("n * r must be even");
                }
            }
            GenSpec::Bipartite {
                edge_prob, weights, ..
            } => {
                if !(0.0..=1.0).contains(&edge_prob) {
                    return bad("edge probability must lie in [0, 1]");
                }
                if let WeightSpec::Uniform { lo, hi } = weights {
                    if !(lo > 0.0 && lo.is_finite() && hi.is_finite() && hi >= lo) {
                        return bad("uniform weights need 0 < lo <= hi");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Generated, GenError> {
        self.validate()?;
        match *self {
            GenSpec::Tight { k, x } => {
                let (instance, bip) = tight_with_sides(k, x)?;
                Ok(Generated {
                    instance,
                    bipartition: Some(bip),
                })
            }
            GenSpec::Gap { k } => {
                let (instance, bip) = gap_with_sides(k)?;
                Ok(Generated {
                    instance,
                    bipartition: Some(bip),
                })
            }
            GenSpec::Regular { n, r, seed } => {
                let graph = gen_random_regular(n, r, seed)?;
                Ok(Generated {
                    instance: WeightedInstance::mivc(graph, n),
                    bipartition: None,
                })
            }
            GenSpec::Bipartite {
                n_a,
                n_b,
                edge_prob,
                seed,
                stream,
                weights,
            } => {
                let (instance, bip) =
                    gen_random_bipartite(n_a, n_b, edge_prob, seed, stream, weights)?;
                Ok(Generated {
                    instance,
                    bipartition: Some(bip),
                })
            }
        }
    }

    /// One-line parameter summary, used for provenance comments.
    pub fn describe(&self) -> String {
        match *self {
            GenSpec::Tight { k, x } => format!("family tight k={k} x={x}"),
            GenSpec::Gap { k } => format!("family gap k={k}"),
            GenSpec::Regular { n, r, seed } => format!("family regular n={n} r={r} seed={seed}"),
            GenSpec::Bipartite {
                n_a,
                n_b,
                edge_prob,
                seed,
                stream,
                weights,
            } => {
                let w = match weights {
                    WeightSpec::Degree => String::from("degree"),
                    WeightSpec::Uniform { lo, hi } => format!("uniform({lo},{hi})"),
                };
                format!(
                    "family bipartite n_a={n_a} n_b={n_b} p={edge_prob} seed={seed} \
                     stream={stream} weights={w}"
                )
            }
        }
    }
}

/// The greedy tight example: two mirrored chains of `k/2` degree-`x` vertices joined by one
/// bridge edge between pendant vertices. Degree weights, budget `k`.
///
/// In each copy, hub `a_i` (i = 1..k/2) is adjacent to `b_{i,1..x}` with `b_{i,x} = b_{i+1,1}`.
/// The bridge joins `b_{1,1}` of the first copy to its mirror. Ids: first copy hubs, first copy
/// b-vertices in `(i, j)` order, then the second copy in the same layout.
pub fn gen_tight(k: usize, x: usize) -> Result<WeightedInstance, GenError> {
    tight_with_sides(k, x).map(|(inst, _)| inst)
}

fn tight_with_sides(k: usize, x: usize) -> Result<(WeightedInstance, Bipartition), GenError> {
    GenSpec::Tight { k, x }.validate()?;
    let hubs = k / 2;
    let copy = hubs + hubs * (x - 1) + 1;
    let b_id = |i: usize, j: usize| hubs + i * (x - 1) + j;
    let mut edges = Vec::with_capacity(k * x + 1);
    for offset in [0, copy] {
        for i in 0..hubs {
            for j in 0..x {
                edges.push((offset + i, offset + b_id(i, j)));
            }
        }
    }
    edges.push((b_id(0, 0), copy + b_id(0, 0)));
    let graph = Graph::from_edges(2 * copy, &edges)?;
    let side_a: Vec<usize> = (0..hubs).chain(copy + hubs..2 * copy).collect();
    let side_b: Vec<usize> = (hubs..copy).chain(copy..copy + hubs).collect();
    let bip = Bipartition::from_sides(&graph, side_a, side_b)?;
    Ok((WeightedInstance::mivc(graph, k), bip))
}

/// The integrality-gap example: hub `a_0` adjacent to `p = k(k-1)+1` vertices `b_i`, each
/// `b_i` with `k-1` private pendants `a_{i,j}`. Degree weights, budget `k`.
///
/// Ids: `a_0 = 0`, then `a_{i,j}` at `1 + (i-1)(k-1) + (j-1)`, then `b_i` after all of A.
pub fn gen_gap(k: usize) -> Result<WeightedInstance, GenError> {
    gap_with_sides(k).map(|(inst, _)| inst)
}

/// Number of `b` vertices in the gap example.
pub fn gap_p(k: usize) -> usize {
    k * (k - 1) + 1
}

fn gap_with_sides(k: usize) -> Result<(WeightedInstance, Bipartition), GenError> {
    GenSpec::Gap { k }.validate()?;
    let p = gap_p(k);
    let size_a = (k - 1) * p + 1;
    let mut edges = Vec::with_capacity(p * k);
    for i in 0..p {
        let b = size_a + i;
        edges.push((0, b));
        for j in 0..k - 1 {
            edges.push((1 + i * (k - 1) + j, b));
        }
    }
    let graph = Graph::from_edges(size_a + p, &edges)?;
    let bip = Bipartition::from_sides(
        &graph,
        (0..size_a).collect(),
        (size_a..size_a + p).collect(),
    )?;
    Ok((WeightedInstance::mivc(graph, k), bip))
}

/// The fractional point `x(a_0) = (k-1)/k`, `x(b_i) = 1/k`, zero elsewhere, in [`gen_gap`] ids.
pub fn gap_fractional_point(k: usize) -> Vec<f64> {
    let p = gap_p(k);
    let size_a = (k - 1) * p + 1;
    let mut x = vec![0.0; size_a + p];
    x[0] = (k - 1) as f64 / k as f64;
    for v in &mut x[size_a..] {
        *v = 1.0 / k as f64;
    }
    x
}

/// Objective of [`gap_fractional_point`]: `(k(k-1)+1)(2k-1)/k`.
pub fn gap_fractional_value(k: usize) -> Ratio<i128> {
    let k = k as i128;
    Ratio::new((k * (k - 1) + 1) * (2 * k - 1), k)
}

/// Random simple `r`-regular graph on `n` vertices by stub pairing.
///
/// When `r > (n-1)/2` the sparser complement is paired and then complemented.
pub fn gen_random_regular(n: usize, r: usize, seed: u64) -> Result<Graph, GenError> {
    gen_regular_with_clique(n, r, &[], seed)
}

/// Random `r`-regular graph containing `clique` as a clique. Stubs left after the clique
/// edges are paired uniformly, rejecting loops, repeated edges and pairs inside the clique.
pub fn gen_regular_with_clique(
    n: usize,
    r: usize,
    clique: &[usize],
    seed: u64,
) -> Result<Graph, GenError> {
    GenSpec::Regular { n, r, seed }.validate()?;
    let bad = |reason| GenError::InvalidParameter {
        family: "regular",
        reason,
    };
    let mut in_clique = vec![false; n];
    for &v in clique {
        if v >= n || in_clique[v] {
            return Err(bad("clique vertices must be distinct and in range"));
        }
        in_clique[v] = true;
    }
    if clique.len() > r + 1 {
        return Err(bad("clique larger than r + 1"));
    }
    let mut rng = seeded_rng(seed, 0);
    let forbid = |u: usize, v: usize| in_clique[u] && in_clique[v];
    let complement_degree = n - 1 - r;
    if complement_degree < r {
        let degrees = vec![complement_degree; n];
        let edges = pair_stubs(n, &degrees, &forbid, &mut rng)?;
        Ok(Graph::from_edges(n, &edges)?.complement())
    } else {
        let degrees: Vec<usize> = (0..n)
            .map(|v| {
                if in_clique[v] {
                    r + 1 - clique.len()
                } else {
                    r
                }
            })
            .collect();
        let mut edges = pair_stubs(n, &degrees, &forbid, &mut rng)?;
        for (i, &u) in clique.iter().enumerate() {
            edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
        }
        Ok(Graph::from_edges(n, &edges)?)
    }
}

/// Pairs `degrees[v]` stubs per vertex into a simple graph avoiding `forbid` pairs. A bad pair
/// is redrawn; a pairing that gets stuck restarts from scratch, up to [`PAIRING_RESTARTS`].
fn pair_stubs(
    n: usize,
    degrees: &[usize],
    forbid: &dyn Fn(usize, usize) -> bool,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(usize, usize)>, GenError> {
    let stubs: Vec<usize> = (0..n)
        .flat_map(|v| core::iter::repeat_n(v, degrees[v]))
        .collect();
    if stubs.len() % 2 == 1 {
        return Err(GenError::InvalidParameter {
            family: "regular",
            reason: "odd number of stubs",
        });
    }
    'restart: for _ in 0..PAIRING_RESTARTS {
        let mut open = stubs.clone();
        open.shuffle(rng);
        let mut present = BTreeSet::new();
        let mut edges = Vec::with_capacity(stubs.len() / 2);
        while !open.is_empty() {
            let mut placed = false;
            for _ in 0..100 + 10 * open.len() {
                let i = rng.random_range(0..open.len());
                let j = rng.random_range(0..open.len());
                let (u, v) = (open[i].min(open[j]), open[i].max(open[j]));
                if i == j || u == v || forbid(u, v) || present.contains(&(u, v)) {
                    continue;
                }
                present.insert((u, v));
                edges.push((u, v));
                open.swap_remove(i.max(j));
                open.swap_remove(i.min(j));
                placed = true;
                break;
            }
            if !placed {
                continue 'restart;
            }
        }
        return Ok(edges);
    }
    Err(GenError::RetriesExhausted {
        attempts: PAIRING_RESTARTS,
    })
}

/// Random bipartite instance: A = `0..n_a`, B = `n_a..n_a+n_b`, each cross pair an edge with
/// probability `edge_prob`. The budget is set to the vertex count; use
/// [`WeightedInstance::with_budget`] to pick one.
pub fn gen_random_bipartite(
    n_a: usize,
    n_b: usize,
    edge_prob: f64,
    seed: u64,
    stream: u64,
    weights: WeightSpec,
) -> Result<(WeightedInstance, Bipartition), GenError> {
    GenSpec::Bipartite {
        n_a,
        n_b,
        edge_prob,
        seed,
        stream,
        weights,
    }
    .validate()?;
    let mut rng = seeded_rng(seed, stream);
    let n = n_a + n_b;
    let mut edges = Vec::new();
    for a in 0..n_a {
        for b in n_a..n {
            if rng.random_bool(edge_prob) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::from_edges(n, &edges)?;
    let bip = Bipartition::from_sides(&graph, (0..n_a).collect(), (n_a..n).collect())?;
    let instance = match weights {
        WeightSpec::Degree => WeightedInstance::mivc(graph, n),
        WeightSpec::Uniform { lo, hi } => {
            let w = (0..n)
                .map(|_| {
                    if hi > lo {
                        rng.random_range(lo..hi)
                    } else {
                        lo
                    }
                })
                .collect();
            WeightedInstance::new(graph, w, n)?
        }
    };
    Ok((instance, bip))
}

/// Seeded corpus of small random bipartite instances: sides of 1..=8 vertices, edge
/// probability cycling through 0.2, 0.5, 0.8, and weights alternating between degree and
/// uniform on `[1, 10)`. Instance `i` draws from ChaCha stream `i + 1`.
pub fn random_bipartite_corpus(seed: u64, count: usize) -> Vec<GenSpec> {
    const PROBS: [f64; 3] = [0.2, 0.5, 0.8];
    let mut rng = seeded_rng(seed, 0);
    (0..count)
        .map(|i| GenSpec::Bipartite {
            n_a: rng.random_range(1..=8),
            n_b: rng.random_range(1..=8),
            edge_prob: PROBS[i % 3],
            seed,
            stream: i as u64 + 1,
            weights: if (i / 3) % 2 == 0 {
                WeightSpec::Degree
            } else {
                WeightSpec::Uniform { lo: 1.0, hi: 10.0 }
            },
        })
        .collect()
}

/// Erdős–Rényi `G(n, p)` graph, used for general-graph test corpora.
pub fn gen_gnp(n: usize, edge_prob: f64, seed: u64, stream: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GenError::InvalidParameter {
            family: "gnp",
            reason: "edge probability must lie in [0, 1]",
        });
    }
    let mut rng = seeded_rng(seed, stream);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}
