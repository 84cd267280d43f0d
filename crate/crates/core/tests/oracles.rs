//! Shortest-path metrics, k-shell and max flow against brute-force references.

use centra_core::generators::erdos_renyi;
use centra_core::graph::flow::FlowNetwork;
use centra_core::graph::paths::shortest_paths;
use centra_core::iterative::k_shell;
use centra_core::{global, Graph64, MetricParams};
use centra_testkit as tk;

fn corpus() -> Vec<(Graph64, Vec<Vec<usize>>)> {
    tk::connected_corpus().into_iter().map(|g| (Graph64::from_edges(g.n, false, &g.edges), g.adjacency())).collect()
}

fn er_graphs() -> Vec<(Graph64, Vec<Vec<usize>>)> {
    (0..50)
        .map(|seed| {
            let g: Graph64 = erdos_renyi(30, 0.2, false, seed).unwrap();
            let adj = (0..g.n()).map(|v| g.neighbors(v).collect()).collect();
            (g, adj)
        })
        .collect()
}

#[test]
fn sigma_matches_path_enumeration() {
    for (g, adj) in corpus() {
        for s in 0..g.n() {
            let sp = shortest_paths(&g, s, None).unwrap();
            for t in 0..g.n() {
                assert_eq!(sp.sigma[t] as u64, tk::sigma_brute(&adj, s, t), "s={s} t={t} {adj:?}");
            }
        }
    }
}

#[test]
fn betweenness_matches_enumeration_on_corpus() {
    let p = MetricParams::default();
    for (g, adj) in corpus() {
        let b = global::betweenness(&g, &p).unwrap().values;
        assert!(tk::close(&b, &tk::betweenness_brute(&adj), 1e-9), "{adj:?}");
    }
}

#[test]
fn betweenness_matches_pair_formula_on_random_graphs() {
    let p = MetricParams::default();
    for (g, adj) in er_graphs() {
        let b = global::betweenness(&g, &p).unwrap().values;
        assert!(tk::close(&b, &tk::betweenness_pairs(&adj), 1e-9));
    }
}

#[test]
fn distance_metrics_match_floyd_warshall() {
    let p = MetricParams::default();
    for (g, adj) in corpus().into_iter().chain(er_graphs()) {
        assert!(tk::close(&global::closeness(&g, &p).unwrap().values, &tk::closeness_brute(&adj), 1e-9));
        assert!(tk::close(&global::eccentricity(&g, &p).unwrap().values, &tk::eccentricity_brute(&adj), 1e-9));
        assert!(tk::close(&global::load(&g, &p).unwrap().values, &tk::load_brute(&adj), 1e-9), "{adj:?}");
    }
}

#[test]
fn k_shell_matches_repeated_pruning() {
    for (g, adj) in corpus().into_iter().chain(er_graphs()) {
        let shell: Vec<usize> = k_shell(&g).shell.iter().map(|&x| x as usize).collect();
        assert_eq!(shell, tk::k_shell_brute(&adj));
    }
}

#[test]
fn max_flow_equals_min_cut() {
    let mut graphs: Vec<tk::SmallGraph> = tk::connected_corpus();
    for seed in 0..40 {
        let g: Graph64 = erdos_renyi(8, 0.4, false, seed).unwrap();
        graphs.push(tk::SmallGraph { n: 8, edges: g.edges().map(|(u, v, _)| (u, v)).collect() });
    }
    for g in graphs.iter().filter(|g| g.n >= 2) {
        for s in 0..g.n {
            for t in (0..g.n).filter(|&t| t != s) {
                let mut net = FlowNetwork::<f64>::new(g.n);
                for &(u, v) in &g.edges {
                    net.add_edge(u, v, 1.0);
                }
                let flow = net.max_flow(s, t);
                assert_eq!(flow, tk::min_edge_cut_brute(g.n, &g.edges, s, t) as f64, "{g:?} {s}->{t}");
            }
        }
    }
}
