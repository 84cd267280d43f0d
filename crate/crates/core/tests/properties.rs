//! Structural invariants checked on random graphs.

use centra_core::graph::components::{components, Connectivity};
use centra_core::graph::paths::all_pairs_distances;
use centra_core::graph_metrics::{self as gm, CentralizationBase, MetricValue};
use centra_core::iterative::{self, walks::leader_rank_step};
use centra_core::linalg::power_iteration;
use centra_core::local::{self, DegreeKind};
use centra_core::resilience::{infectious_attack, non_infectious_attack, NodeState};
use centra_core::select::{self, adjacency, ci_lambda, ci_score, GroupSelectParams, StopReason};
use centra_core::{global, registry, Graph64, MetricParams};
use centra_testkit as tk;
use proptest::prelude::*;

type Spec = (usize, Vec<(usize, usize)>);

fn graph(max_n: usize, directed: bool) -> impl Strategy<Value = Spec> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::bool::weighted(0.3), n * n).prop_map(move |bits| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    let keep = if directed { u != v } else { u < v };
                    if keep && bits[u * n + v] {
                        edges.push((u, v));
                    }
                }
            }
            (n, edges)
        })
    })
}

/// Undirected and connected: a random spanning tree plus random chords.
fn connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Spec> {
    (min_n..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(any::<usize>(), n), prop::collection::vec(prop::bool::weighted(0.25), n * n)).prop_map(
            move |(parents, bits)| {
                let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v] % v, v)).collect();
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[u * n + v] && !edges.contains(&(u, v)) {
                            edges.push((u, v));
                        }
                    }
                }
                (n, edges)
            },
        )
    })
}

/// Directed and strongly connected: a Hamiltonian cycle plus random arcs.
fn strongly_connected(max_n: usize) -> impl Strategy<Value = Spec> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.2), n * n).prop_map(move |bits| {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            for u in 0..n {
                for v in 0..n {
                    if u != v && v != (u + 1) % n && bits[u * n + v] {
                        edges.push((u, v));
                    }
                }
            }
            (n, edges)
        })
    })
}

fn build((n, edges): &Spec, directed: bool) -> Graph64 {
    Graph64::from_edges(*n, directed, edges)
}

fn relabel((n, edges): &Spec, perm: &[usize]) -> Spec {
    (*n, edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn params() -> MetricParams {
    MetricParams::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn component_sizes_cover_every_node(spec in graph(12, true), directed in any::<bool>()) {
        let g = build(&spec, directed);
        for mode in [Connectivity::Weak, Connectivity::Strong] {
            prop_assert_eq!(components(&g, mode).sizes.iter().sum::<usize>(), g.n());
        }
    }

    #[test]
    fn power_iteration_residual(spec in connected(2, 12)) {
        let g = build(&spec, false);
        let tol = 1e-10;
        let op = |x: &[f64], y: &mut [f64]| {
            for v in 0..g.n() {
                y[v] = g.neighbors(v).map(|u| x[u]).sum();
            }
        };
        let e = power_iteration(g.n(), op, None, tol, 100_000).unwrap();
        let mut y = vec![0.0; g.n()];
        op(&e.vector, &mut y);
        let residual = e.vector.iter().zip(&y).fold(0.0f64, |m, (x, y)| m.max((y - e.value * x).abs()));
        prop_assert!(residual < 10.0 * tol);
    }

    #[test]
    fn normalized_degree_in_unit_interval(spec in graph(10, true), directed in any::<bool>()) {
        let g = build(&spec, directed);
        for x in local::degree(&g, DegreeKind::Total, true).unwrap().values {
            prop_assert!((0.0..=1.0).contains(&x));
        }
    }

    #[test]
    fn clustering_matches_triangle_enumeration(spec in graph(8, false)) {
        let g = build(&spec, false);
        let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).collect()).collect();
        let c = local::clustering(&g).unwrap().values;
        prop_assert!(c.iter().all(|x| (0.0..=1.0).contains(x)));
        prop_assert!(tk::close(&c, &tk::clustering_brute(&adj), 1e-12));
    }

    #[test]
    fn h_index_descends_to_coreness(spec in graph(10, false)) {
        let g = build(&spec, false);
        let core: Vec<usize> = iterative::k_shell(&g).shell.iter().map(|&x| x as usize).collect();
        let mut prev = local::h_index_values(&g, 0);
        let mut reached = false;
        for k in 1..=g.n().max(1) {
            let h = local::h_index_values(&g, k);
            prop_assert!(h.iter().zip(&prev).all(|(a, b)| a <= b));
            if reached {
                prop_assert_eq!(&h, &prev);
            }
            reached |= h == core;
            prev = h;
        }
        prop_assert_eq!(prev, core);
    }

    #[test]
    fn semi_local_and_volume_are_equivariant(spec in graph(9, false).prop_flat_map(|s| { let n = s.0; (Just(s), permutation(n)) })) {
        let (spec, perm) = spec;
        let g = build(&spec, false);
        let h = build(&relabel(&spec, &perm), false);
        for (a, b) in [
            (local::semi_local(&g).unwrap().values, local::semi_local(&h).unwrap().values),
            (local::volume(&g, 2).unwrap().values, local::volume(&h, 2).unwrap().values),
        ] {
            for v in 0..g.n() {
                prop_assert_eq!(a[v], b[perm[v]]);
            }
        }
    }

    #[test]
    fn redundancy_bounded_by_degree(spec in graph(10, false)) {
        let g = build(&spec, false);
        let r = local::redundancy(&g).unwrap().values;
        for v in 0..g.n() {
            prop_assert!(r[v] <= (g.degree(v) as f64 - 1.0).max(0.0) + 1e-12);
        }
    }

    #[test]
    fn fixed_points_are_bit_identical(spec in strongly_connected(9)) {
        let g = build(&spec, true);
        let p = params();
        for id in ["eigenvector", "katz", "pagerank", "leader-rank", "authority", "salsa-hub", "cumulative-nomination"] {
            let a = registry::point_metric(&g, id, &p).unwrap().values;
            let b = registry::point_metric(&g, id, &p).unwrap().values;
            prop_assert_eq!(a.iter().map(|x| x.to_bits()).collect::<Vec<_>>(), b.iter().map(|x| x.to_bits()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn spectral_scores_positive_when_strongly_connected(spec in strongly_connected(9)) {
        let g = build(&spec, true);
        let p = params();
        for id in ["eigenvector", "pagerank", "katz"] {
            let v = registry::point_metric(&g, id, &p).unwrap().values;
            prop_assert!(v.iter().all(|&x| x > 0.0), "{} {:?}", id, v);
        }
    }

    #[test]
    fn leader_rank_conserves_total(spec in graph(10, true)) {
        let g = build(&spec, true);
        let n = g.n();
        let mut s = vec![1.0; n + 1];
        s[n] = 0.0;
        let mut out = vec![0.0; n + 1];
        for _ in 0..200 {
            leader_rank_step(&g, &s, &mut out);
            prop_assert!((out.iter().sum::<f64>() - n as f64).abs() < 1e-9);
            std::mem::swap(&mut s, &mut out);
        }
    }

    #[test]
    fn salsa_sides_sum_to_one(spec in graph(10, true)) {
        let g = build(&spec, true);
        prop_assume!(g.m() > 0);
        let (auth, hub) = iterative::salsa(&g, &params()).unwrap();
        prop_assert!((auth.values.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        prop_assert!((hub.values.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn eigenvector_ignores_initial_scale(spec in connected(2, 10), scale in 0.01f64..100.0) {
        let g = build(&spec, false);
        let op = |x: &[f64], y: &mut [f64]| {
            for v in 0..g.n() {
                y[v] = g.neighbors(v).map(|u| x[u]).sum();
            }
        };
        let init: Vec<f64> = (0..g.n()).map(|v| 1.0 + v as f64).collect();
        let scaled: Vec<f64> = init.iter().map(|x| x * scale).collect();
        let a = power_iteration(g.n(), op, Some(&init), 1e-12, 100_000).unwrap().vector;
        let b = power_iteration(g.n(), op, Some(&scaled), 1e-12, 100_000).unwrap().vector;
        prop_assert!(tk::same_ranking(&a, &b, 1e-9));
    }

    #[test]
    fn l_betweenness_grows_to_betweenness(spec in connected(2, 10)) {
        let g = build(&spec, false);
        let full = global::betweenness(&g, &params()).unwrap().values;
        let d = all_pairs_distances(&g).unwrap();
        let diameter = d.iter().flatten().fold(0.0f64, |m, &x| m.max(x)) as usize;
        let mut prev = vec![0.0; g.n()];
        for l in 1..=diameter.max(1) {
            let p = MetricParams { l: Some(l), ..params() };
            let b = global::l_betweenness(&g, &p).unwrap().values;
            prop_assert!(b.iter().zip(&prev).all(|(x, y)| x + 1e-12 >= *y));
            prev = b;
        }
        prop_assert!(tk::close(&prev, &full, 1e-12));
    }

    #[test]
    fn closeness_positive_iff_something_reachable(spec in graph(10, true), directed in any::<bool>()) {
        let g = build(&spec, directed);
        let c = global::closeness(&g, &params()).unwrap().values;
        for v in 0..g.n() {
            prop_assert_eq!(c[v] > 0.0, g.out_degree(v) > 0);
        }
    }

    #[test]
    fn uniform_percolation_ranks_like_betweenness(spec in connected(3, 10)) {
        let g = build(&spec, false);
        let b = global::betweenness(&g, &params()).unwrap().values;
        let p = global::percolation(&g, &params()).unwrap().values;
        prop_assert!((tk::spearman(&b, &p, 1e-9) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_walk_and_current_flow_rank_alike(spec in connected(3, 10)) {
        let g = build(&spec, false);
        let a = global::random_walk_betweenness(&g, &params()).unwrap().values;
        let b = global::current_flow_betweenness(&g, &params()).unwrap().values;
        prop_assert!(tk::same_ranking(&a, &b, 1e-9));
    }

    #[test]
    fn centralization_in_unit_interval(spec in connected(3, 9)) {
        let g = build(&spec, false);
        let p = params();
        let mut values = vec![gm::degree_gc(&g, true).unwrap().as_real().unwrap()];
        for base in [CentralizationBase::Betweenness, CentralizationBase::Closeness, CentralizationBase::FlowBetweenness] {
            values.push(gm::centralization(&g, base, &p).unwrap().as_real().unwrap());
        }
        for x in values {
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&x), "{}", x);
        }
    }

    #[test]
    fn deepest_k_core_is_top_shell(spec in graph(10, false)) {
        let g = build(&spec, false);
        let top = iterative::k_shell(&g).shell.iter().fold(0.0f64, |m, &x| m.max(x)) as usize;
        prop_assert!(top == 0 || !gm::cohesion::k_core(&g, top).is_empty());
        prop_assert!(gm::cohesion::k_core(&g, top + 1).is_empty());
    }

    #[test]
    fn reciprocity_in_unit_interval(spec in graph(10, true)) {
        let g = build(&spec, true);
        prop_assume!(g.m() > 0);
        let r = gm::reciprocity(&g).unwrap().as_real().unwrap();
        prop_assert!((0.0..=1.0).contains(&r));
    }

    #[test]
    fn sampled_hyperbolicity_below_exhaustive(spec in connected(4, 9), samples in 1usize..40, seed in any::<u64>()) {
        let g = build(&spec, false);
        let max_of = |p: &MetricParams| match gm::delta_hyperbolicity(&g, p).unwrap().value {
            MetricValue::Hyperbolicity(h) => h.max,
            other => panic!("{other:?}"),
        };
        let exact = max_of(&MetricParams { sample_count: 1 << 20, ..params() });
        let sampled = max_of(&MetricParams { sample_count: samples, rng_seed: seed, ..params() });
        prop_assert!(sampled <= exact);
    }

    #[test]
    fn strategies_are_deterministic_and_within_budget(spec in graph(10, false), budget in 1usize..10) {
        let g = build(&spec, false);
        prop_assume!(budget <= g.n());
        let p = GroupSelectParams { budget, ..Default::default() };
        for id in registry::STRATEGIES {
            let a = registry::strategy(&g, id, &p).unwrap();
            prop_assert_eq!(&a, &registry::strategy(&g, id, &p).unwrap());
            prop_assert!(a.seeds.len() <= budget);
            prop_assert_eq!(a.per_step.len(), a.seeds.len());
            let mut s = a.seeds.clone();
            s.sort_unstable();
            s.dedup();
            prop_assert_eq!(s.len(), a.seeds.len());
        }
    }

    #[test]
    fn discount_heuristics_share_first_pick(spec in graph(10, false)) {
        let g = build(&spec, false);
        let a = select::single_discount(&g, 1).unwrap();
        let b = select::degree_discount(&g, 1, 0.0).unwrap();
        prop_assert_eq!(a.seeds, b.seeds);
    }

    #[test]
    fn ci_stopping_rule_reaches_threshold(spec in connected(4, 14), ell in 1usize..3) {
        let g = build(&spec, false);
        let p = GroupSelectParams { budget: g.n(), ell, q_stop: Some(0.0), ..Default::default() };
        let r = select::collective_influence(&g, &p).unwrap();
        prop_assert_eq!(r.stop_reason, StopReason::StoppingRule);
        let adj = adjacency(&g);
        let mut alive = vec![true; g.n()];
        for &v in &r.seeds {
            alive[v] = false;
        }
        let deg: Vec<usize> = (0..g.n()).map(|v| if alive[v] { adj[v].iter().filter(|&&u| alive[u]).count() } else { 0 }).collect();
        let total: i64 = (0..g.n()).filter(|&v| alive[v]).map(|v| ci_score(&adj, &alive, &deg, v, ell)).sum();
        let mean_degree = 2.0 * g.m() as f64 / g.n() as f64;
        prop_assert!(ci_lambda(total, g.n(), mean_degree, ell) <= 1.0);
    }

    #[test]
    fn giant_fraction_never_grows_with_phi(spec in graph(12, false)) {
        let g = build(&spec, false);
        let order = registry::point_metric(&g, "degree", &params()).unwrap().ranking();
        let grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        let giant = non_infectious_attack(&g, &order, &grid).unwrap();
        prop_assert!(giant.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(giant[10], 0.0);
    }

    #[test]
    fn sir_accounting(spec in graph(12, true), directed in any::<bool>(), beta in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = build(&spec, directed);
        let o = infectious_attack(&g, &[0], beta, seed).unwrap();
        let s = o.states.iter().filter(|&&x| x == NodeState::Susceptible).count();
        let r = o.states.iter().filter(|&&x| x == NodeState::Removed).count();
        prop_assert_eq!(s + o.infected_total, g.n());
        prop_assert_eq!(r, o.infected_total);
        prop_assert!(o.states.iter().all(|&x| x != NodeState::Infected));
        prop_assert!(o.immune.iter().zip(&o.states).all(|(&i, &x)| !i || x == NodeState::Susceptible));
    }
}
