mod common;

use common::{brute_coverage, brute_has_clique, brute_mwis, naive_mwbis, same_value};
use mwbis_core::generators::{gen_random_bipartite, gen_regular_with_clique, WeightSpec};
use mwbis_core::lp::{build_lp, solve_lp, LpStatus, DEFAULT_CLIQUE_CAP};
use mwbis_core::reductions::{
    clique_to_solution, construct_bipartite, exact_mivc_reduction, has_k_clique,
};
use mwbis_core::solvers::{
    color_class_approx, exact_mwbis, greedy_bipartite, mwis_bipartite_exact, mwis_truncation,
    top_k, SearchConfig,
};
use mwbis_core::{
    bipartition, covered_edges, degeneracy_order, is_independent, set_weight, Coloring, Graph,
    WeightedInstance,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A graph with integer weights in `1..=20` and a budget in `1..=n`.
fn instance_strategy(max_n: usize) -> impl Strategy<Value = WeightedInstance> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (
            proptest::collection::vec(1u32..=20, n),
            1..=n,
            any::<bool>(),
        )
            .prop_map(move |(w, k, degree)| {
                if degree {
                    WeightedInstance::mivc(g.clone(), k)
                } else {
                    WeightedInstance::new(g.clone(), w.into_iter().map(f64::from).collect(), k)
                        .unwrap()
                }
            })
    })
}

fn bipartite_strategy() -> impl Strategy<Value = (WeightedInstance, mwbis_core::Bipartition)> {
    (
        1usize..=6,
        1usize..=6,
        0.0f64..=1.0,
        any::<u64>(),
        any::<bool>(),
    )
        .prop_flat_map(|(na, nb, p, seed, degree)| {
            let weights = if degree {
                WeightSpec::Degree
            } else {
                WeightSpec::Uniform { lo: 0.5, hi: 10.0 }
            };
            let (inst, bip) = gen_random_bipartite(na, nb, p, seed, 1, weights).unwrap();
            (1..=na + nb).prop_map(move |k| (inst.with_budget(k), bip.clone()))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coverage_equals_degree_sum_on_independent_sets(g in graph_strategy(10), mask in any::<u16>()) {
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
        prop_assert_eq!(covered_edges(&g, &set), brute_coverage(&g, &set));
        if is_independent(&g, &set) {
            let inst = WeightedInstance::mivc(g.clone(), g.n());
            prop_assert_eq!(set_weight(&inst, &set), covered_edges(&g, &set) as f64);
        }
    }

    #[test]
    fn exact_matches_enumeration(inst in instance_strategy(10)) {
        let s = exact_mwbis(&inst, &SearchConfig::unlimited());
        prop_assert!(s.proven_optimal);
        prop_assert!(s.verify(&inst).is_ok());
        prop_assert!(same_value(s.value, naive_mwbis(&inst)));
    }

    #[test]
    fn greedy_is_half_approximate((inst, bip) in bipartite_strategy()) {
        let greedy = greedy_bipartite(&inst, &bip);
        prop_assert!(greedy.verify(&inst).is_ok());
        prop_assert!(2.0 * greedy.value >= naive_mwbis(&inst) - 1e-9);
    }

    #[test]
    fn bipartite_mwis_is_optimal((inst, bip) in bipartite_strategy()) {
        let g = inst.graph();
        let set = mwis_bipartite_exact(g, inst.weights(), &bip);
        prop_assert!(is_independent(g, &set));
        let value: f64 = set.iter().map(|&v| inst.weight(v)).sum();
        prop_assert!(same_value(value, brute_mwis(g, inst.weights())));
    }

    #[test]
    fn truncation_keeps_a_k_over_n_share((inst, bip) in bipartite_strategy()) {
        let t = mwis_truncation(&inst, &bip);
        prop_assert!(t.verify(&inst).is_ok());
        let full = brute_mwis(inst.graph(), inst.weights());
        let n = inst.graph().n() as f64;
        prop_assert!(t.value * n >= full * inst.k().min(inst.graph().n()) as f64 - 1e-9);
    }

    #[test]
    fn colorings_are_proper_and_approximate(inst in instance_strategy(10)) {
        let g = inst.graph();
        let opt = naive_mwbis(&inst);
        let (_, d) = degeneracy_order(g);
        for (coloring, cap) in [
            (Coloring::natural(g), g.max_degree() + 1),
            (Coloring::degeneracy(g), d + 1),
        ] {
            prop_assert!(coloring.is_proper(g));
            prop_assert!(coloring.num_colors() <= cap);
            let s = color_class_approx(&inst, &coloring);
            prop_assert!(s.verify(&inst).is_ok());
            prop_assert!(coloring.num_colors() as f64 * s.value >= opt - 1e-9);
        }
    }

    #[test]
    fn bipartition_is_valid_or_cycle_is_odd(g in graph_strategy(10)) {
        match bipartition(&g) {
            Ok(bip) => prop_assert!(bip.is_valid_for(&g)),
            Err(odd) => {
                let c = &odd.cycle;
                prop_assert!(c.len() % 2 == 1);
                for i in 0..c.len() {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }

    #[test]
    fn lp_dominates_ip(inst in instance_strategy(8)) {
        let model = build_lp(&inst, DEFAULT_CLIQUE_CAP).unwrap();
        let lp = solve_lp(&model).unwrap();
        prop_assert_eq!(lp.status, LpStatus::Optimal);
        prop_assert!(model.max_violation(&lp.values) <= 1e-9);
        prop_assert!(lp.objective >= naive_mwbis(&inst) - 1e-9);
        prop_assert!(lp.certified);
    }

    #[test]
    fn top_k_takes_the_heaviest(w in proptest::collection::vec(0u8..5, 1..12), k in 0usize..14) {
        let weights: Vec<f64> = w.iter().map(|&x| f64::from(x)).collect();
        let all: Vec<usize> = (0..weights.len()).collect();
        let picked = top_k(&weights, &all, k);
        prop_assert_eq!(picked.len(), k.min(weights.len()));
        let mut sorted = weights.clone();
        sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let best: f64 = sorted.iter().take(k).sum();
        let got: f64 = picked.iter().map(|&v| weights[v]).sum();
        prop_assert_eq!(got, best);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reduction_host_invariants_and_witness(seed in any::<u64>(), k in 3usize..=5) {
        let planted: Vec<usize> = (0..k).collect();
        let g = gen_regular_with_clique(12, 8, &planted, seed).unwrap();
        let ri = construct_bipartite(&g, k).unwrap();
        prop_assert!(ri.check_invariants());
        prop_assert!(bipartition(&ri.host).is_ok());
        let t = clique_to_solution(&ri, &planted).unwrap();
        prop_assert_eq!(t.len(), ri.budget());
        prop_assert!(is_independent(&ri.host, &t));
        prop_assert_eq!(brute_coverage(&ri.host, &t) as u64, ri.target);
        let opt = exact_mivc_reduction(&ri, ri.budget()).unwrap();
        prop_assert!(opt.value as u64 >= ri.target);
    }

    #[test]
    fn clique_search_matches_enumeration(seed in any::<u64>(), k in 3usize..=6) {
        let g = gen_regular_with_clique(12, 8, &[], seed).unwrap();
        prop_assert_eq!(has_k_clique(&g, k).is_some(), brute_has_clique(&g, k));
        if let Some(c) = has_k_clique(&g, k) {
            prop_assert!(g.is_clique(&c) && c.len() == k);
        }
    }
}

#[test]
fn equivalence_holds_in_both_directions() {
    let (mut yes, mut no) = (0, 0);
    for seed in 0..20 {
        let g = mwbis_core::generators::gen_random_regular(14, 10, seed).unwrap();
        let report = mwbis_core::reductions::verify_equivalence(&g, 6).unwrap();
        assert_eq!(report.clique_found, brute_has_clique(&g, 6));
        assert_eq!(report.mivc_opt >= report.target, report.clique_found);
        if report.clique_found {
            yes += 1;
        } else {
            no += 1;
            assert!(report.mivc_opt < report.target);
        }
    }
    assert!(yes > 0 && no > 0, "yes {yes} no {no}");
}
