//! Test corpus and slow reference implementations.
//!
//! Everything here works on plain neighbour lists and shares no code with `centra-core`, so
//! agreement between the two is evidence rather than tautology. Graphs are simple and
//! undirected.

use std::path::PathBuf;

pub type Edges = Vec<(usize, usize)>;

/// A graph as node count plus undirected edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    pub n: usize,
    pub edges: Edges,
}

impl SmallGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

pub fn testdata_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../testdata")
}

/// Every connected simple graph on 1 to 7 nodes, one per isomorphism class.
pub fn connected_corpus() -> Vec<SmallGraph> {
    let path = testdata_dir().join("connected_upto7.txt");
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let mut parts = line.split_whitespace();
            let n = parts.next().expect("node count").parse().expect("node count");
            let edges = parts
                .map(|e| {
                    let (u, v) = e.split_once('-').expect("u-v");
                    (u.parse().expect("u"), v.parse().expect("v"))
                })
                .collect();
            SmallGraph { n, edges }
        })
        .collect()
}

pub const INF: usize = usize::MAX;

/// All-pairs hop distances by Floyd-Warshall.
pub fn floyd_warshall(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut d = vec![vec![INF; n]; n];
    for (v, list) in adj.iter().enumerate() {
        d[v][v] = 0;
        for &u in list {
            d[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every shortest path from `s` to `t`, found by depth-first enumeration of simple paths.
pub fn shortest_path_list(adj: &[Vec<usize>], s: usize, t: usize) -> Vec<Vec<usize>> {
    fn walk(adj: &[Vec<usize>], path: &mut Vec<usize>, on: &mut [bool], t: usize, all: &mut Vec<Vec<usize>>) {
        let v = *path.last().expect("nonempty");
        if v == t {
            all.push(path.clone());
            return;
        }
        for &u in &adj[v] {
            if !on[u] {
                on[u] = true;
                path.push(u);
                walk(adj, path, on, t, all);
                path.pop();
                on[u] = false;
            }
        }
    }
    let mut all = Vec::new();
    let mut on = vec![false; adj.len()];
    on[s] = true;
    walk(adj, &mut vec![s], &mut on, t, &mut all);
    let Some(best) = all.iter().map(Vec::len).min() else { return all };
    all.retain(|p| p.len() == best);
    all
}

/// Number of shortest s-t paths by explicit enumeration.
pub fn sigma_brute(adj: &[Vec<usize>], s: usize, t: usize) -> u64 {
    if s == t {
        return 1;
    }
    shortest_path_list(adj, s, t).len() as u64
}

/// Unnormalized betweenness over unordered pairs, from explicit path enumeration.
pub fn betweenness_brute(adj: &[Vec<usize>]) -> Vec<f64> {
    let n = adj.len();
    let mut b = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_path_list(adj, s, t);
            if paths.is_empty() {
                continue;
            }
            let total = paths.len() as f64;
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    b[v] += 1.0 / total;
                }
            }
        }
    }
    b
}

/// Shortest-path counts for every pair, filled in order of increasing distance.
pub fn sigma_matrix(adj: &[Vec<usize>], d: &[Vec<usize>]) -> Vec<Vec<f64>> {
    let n = adj.len();
    let mut sigma = vec![vec![0.0; n]; n];
    for s in 0..n {
        let mut order: Vec<usize> = (0..n).filter(|&t| d[s][t] != INF).collect();
        order.sort_by_key(|&t| d[s][t]);
        for t in order {
            sigma[s][t] = if t == s {
                1.0
            } else {
                adj[t].iter().filter(|&&u| d[s][u] != INF && d[s][u] + 1 == d[s][t]).map(|&u| sigma[s][u]).sum()
            };
        }
    }
    sigma
}

/// Unnormalized betweenness over unordered pairs from `sigma_sv * sigma_vt / sigma_st`.
pub fn betweenness_pairs(adj: &[Vec<usize>]) -> Vec<f64> {
    let n = adj.len();
    let d = floyd_warshall(adj);
    let sigma = sigma_matrix(adj, &d);
    let mut b = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            if d[s][t] == INF {
                continue;
            }
            for v in (0..n).filter(|&v| v != s && v != t) {
                if d[s][v] != INF && d[v][t] != INF && d[s][v] + d[v][t] == d[s][t] {
                    b[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
                }
            }
        }
    }
    b
}

/// Load over ordered pairs: a unit packet from `s` to `t` splits evenly at every node among
/// the neighbours one hop closer to `t`.
pub fn load_brute(adj: &[Vec<usize>]) -> Vec<f64> {
    let n = adj.len();
    let d = floyd_warshall(adj);
    let mut load = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t || d[s][t] == INF {
                continue;
            }
            let mut amount = vec![0.0; n];
            amount[s] = 1.0;
            let mut by_distance: Vec<usize> = (0..n).filter(|&v| d[v][t] != INF).collect();
            by_distance.sort_by_key(|&v| std::cmp::Reverse(d[v][t]));
            for v in by_distance {
                if v == t || amount[v] == 0.0 {
                    continue;
                }
                if v != s {
                    load[v] += amount[v];
                }
                let next: Vec<usize> = adj[v].iter().copied().filter(|&u| d[u][t] + 1 == d[v][t]).collect();
                let share = amount[v] / next.len() as f64;
                for u in next {
                    amount[u] += share;
                }
            }
        }
    }
    load
}

/// `1 / sum of distances` to reachable nodes; 0 when none are reachable.
pub fn closeness_brute(adj: &[Vec<usize>]) -> Vec<f64> {
    let d = floyd_warshall(adj);
    d.iter()
        .map(|row| {
            let total: usize = row.iter().filter(|&&x| x != INF).sum();
            if total == 0 {
                0.0
            } else {
                1.0 / total as f64
            }
        })
        .collect()
}

/// `1 / max distance` to reachable nodes; 0 when none are reachable.
pub fn eccentricity_brute(adj: &[Vec<usize>]) -> Vec<f64> {
    let d = floyd_warshall(adj);
    d.iter()
        .map(|row| {
            let ecc = row.iter().filter(|&&x| x != INF).max().copied().unwrap_or(0);
            if ecc == 0 {
                0.0
            } else {
                1.0 / ecc as f64
            }
        })
        .collect()
}

/// Coreness as the largest k whose k-core (repeated deletion of nodes of degree < k) keeps v.
pub fn k_shell_brute(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut shell = vec![0; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        loop {
            let drop: Vec<usize> =
                (0..n).filter(|&v| alive[v] && adj[v].iter().filter(|&&u| alive[u]).count() < k).collect();
            if drop.is_empty() {
                break;
            }
            for v in drop {
                alive[v] = false;
            }
        }
        if !alive.iter().any(|&a| a) {
            break;
        }
        for v in (0..n).filter(|&v| alive[v]) {
            shell[v] = k;
        }
    }
    shell
}

/// Local clustering from explicit triple enumeration.
pub fn clustering_brute(adj: &[Vec<usize>]) -> Vec<f64> {
    adj.iter()
        .map(|list| {
            let k = list.len();
            if k < 2 {
                return 0.0;
            }
            let mut closed = 0;
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    if adj[a].contains(&b) {
                        closed += 1;
                    }
                }
            }
            2.0 * closed as f64 / (k * (k - 1)) as f64
        })
        .collect()
}

/// Minimum s-t edge cut of a unit-capacity undirected graph by trying every vertex bipartition.
pub fn min_edge_cut_brute(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> usize {
    assert!(n <= 16, "exhaustive cut search is exponential");
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        let side = |v: usize| mask >> v & 1 == 1;
        if !side(s) || side(t) {
            continue;
        }
        let cut = edges.iter().filter(|&&(u, v)| side(u) != side(v)).count();
        best = best.min(cut);
    }
    best
}

/// Spearman rank correlation with average ranks for ties; values within relative `tol` of
/// their sorted predecessor count as tied.
pub fn spearman(a: &[f64], b: &[f64], tol: f64) -> f64 {
    let ranks = |x: &[f64]| -> Vec<f64> {
        let mut idx: Vec<usize> = (0..x.len()).collect();
        idx.sort_by(|&i, &j| x[i].partial_cmp(&x[j]).expect("finite"));
        let mut r = vec![0.0; x.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && {
                let (p, q) = (x[idx[j]], x[idx[j + 1]]);
                q - p <= tol * p.abs().max(q.abs()).max(1.0)
            } {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0;
            for &k in &idx[i..=j] {
                r[k] = avg;
            }
            i = j + 1;
        }
        r
    };
    let (ra, rb) = (ranks(a), ranks(b));
    let n = a.len() as f64;
    let (ma, mb) = (ra.iter().sum::<f64>() / n, rb.iter().sum::<f64>() / n);
    let cov: f64 = ra.iter().zip(&rb).map(|(x, y)| (x - ma) * (y - mb)).sum();
    let va: f64 = ra.iter().map(|x| (x - ma).powi(2)).sum();
    let vb: f64 = rb.iter().map(|y| (y - mb).powi(2)).sum();
    if va == 0.0 && vb == 0.0 {
        return 1.0;
    }
    cov / (va * vb).sqrt()
}

/// Same weak ordering: for every pair of nodes, the comparison outcome agrees up to `tol`.
pub fn same_ranking(a: &[f64], b: &[f64], tol: f64) -> bool {
    let cmp = |x: &[f64], i: usize, j: usize| {
        let scale = x[i].abs().max(x[j].abs()).max(1.0);
        if (x[i] - x[j]).abs() <= tol * scale {
            std::cmp::Ordering::Equal
        } else {
            x[i].partial_cmp(&x[j]).expect("finite")
        }
    };
    (0..a.len()).all(|i| (0..a.len()).all(|j| cmp(a, i, j) == cmp(b, i, j)))
}

pub fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_counts() {
        let c = connected_corpus();
        let per_n: Vec<usize> = (1..=7).map(|n| c.iter().filter(|g| g.n == n).count()).collect();
        assert_eq!(per_n, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn path_oracles() {
        let p3 = SmallGraph { n: 3, edges: vec![(0, 1), (1, 2)] }.adjacency();
        assert_eq!(betweenness_brute(&p3), vec![0.0, 1.0, 0.0]);
        assert_eq!(load_brute(&p3), vec![0.0, 2.0, 0.0]);
        assert_eq!(closeness_brute(&p3), vec![1.0 / 3.0, 0.5, 1.0 / 3.0]);
        assert_eq!(k_shell_brute(&p3), vec![1, 1, 1]);
        let c4 = SmallGraph { n: 4, edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)] }.adjacency();
        assert_eq!(sigma_brute(&c4, 0, 2), 2);
        assert_eq!(min_edge_cut_brute(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], 0, 2), 2);
    }

    #[test]
    fn pair_formula_matches_enumeration() {
        for g in connected_corpus().iter().filter(|g| g.n <= 6) {
            let adj = g.adjacency();
            assert!(close(&betweenness_pairs(&adj), &betweenness_brute(&adj), 1e-12), "{g:?}");
        }
    }

    #[test]
    fn spearman_ties() {
        assert_eq!(spearman(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0], 0.0), 1.0);
        assert!((spearman(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0], 0.0) + 1.0).abs() < 1e-12);
        assert_eq!(spearman(&[1.0, 1.0 + 1e-15, 3.0], &[2.0, 2.0, 5.0], 1e-12), 1.0);
    }
}
