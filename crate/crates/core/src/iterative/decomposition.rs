use crate::error::Result;
use crate::graph::Graph;
use crate::params::check_prob;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

/// Shell per node and the order nodes were pruned, with the shell they were pruned at.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionResult<T> {
    pub shell: Vec<T>,
    pub removal_order: Vec<(usize, T)>,
}

impl<T: Scalar> DecompositionResult<T> {
    pub fn into_scores(self, metric_id: &str, digest: String) -> Result<ScoreVector<T>> {
        ScoreVector::with_digest(metric_id, self.shell, digest)
    }
}

/// Integer coreness by bucket pruning; directed graphs use total degree.
pub fn k_shell_values<T: Scalar>(g: &Graph<T>) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.pruning_neighbors(v)).collect();
    let mut deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while order.len() < n {
        let Some(v) = buckets[d].pop() else {
            d += 1;
            continue;
        };
        if removed[v] || deg[v] != d {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &u in &nbrs[v] {
            if !removed[u] && deg[u] > d {
                deg[u] -= 1;
                buckets[deg[u]].push(u);
            }
        }
    }
    (deg, order)
}

pub fn k_shell<T: Scalar>(g: &Graph<T>) -> DecompositionResult<T> {
    let (shell, order) = k_shell_values(g);
    DecompositionResult {
        removal_order: order.iter().map(|&v| (v, T::of_usize(shell[v]))).collect(),
        shell: shell.into_iter().map(T::of_usize).collect(),
    }
}

/// Removal by smallest `k_r + lambda * k_e`; all nodes falling to at most M join the M-shell.
pub fn mixed_degree<T: Scalar>(g: &Graph<T>, lambda: f64) -> Result<DecompositionResult<T>> {
    check_prob("lambda_mdd", lambda)?;
    let n = g.n();
    let lam = T::of(lambda);
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.pruning_neighbors(v)).collect();
    let mut kr: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut ke = vec![0usize; n];
    let mixed = |r: usize, e: usize| T::of_usize(r) + lam * T::of_usize(e);
    let mut removed = vec![false; n];
    let mut shell = vec![T::zero(); n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let m = (0..n).filter(|&v| !removed[v]).map(|v| mixed(kr[v], ke[v])).fold(T::infinity(), T::min);
        let slack = T::of(1e-9) * m.abs().max(T::one());
        let mut stack: Vec<usize> = (0..n).filter(|&v| !removed[v] && mixed(kr[v], ke[v]) <= m + slack).collect();
        stack.reverse();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            shell[v] = m;
            order.push((v, m));
            for &u in &nbrs[v] {
                if removed[u] {
                    continue;
                }
                kr[u] -= 1;
                ke[u] += 1;
                if mixed(kr[u], ke[u]) <= m + slack {
                    stack.push(u);
                }
            }
        }
    }
    Ok(DecompositionResult { shell, removal_order: order })
}

/// Neighbourhood coreness: sum of neighbour shells; `plus` sums neighbour nc instead.
pub fn neighborhood_coreness<T: Scalar>(g: &Graph<T>, plus: bool) -> Result<ScoreVector<T>> {
    let (shell, _) = k_shell_values(g);
    let sum_over = |vals: &[usize]| -> Vec<usize> {
        (0..g.n()).map(|v| g.pruning_neighbors(v).iter().map(|&u| vals[u]).sum()).collect()
    };
    let mut vals = sum_over(&shell);
    if plus {
        vals = sum_over(&vals);
    }
    let id = if plus { "nc-plus" } else { "nc" };
    ScoreVector::with_digest(id, vals.into_iter().map(T::of_usize).collect(), "{}".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_pendant() -> Graph<f64> {
        Graph::from_edges(5, false, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    }

    #[test]
    fn k_shell_examples() {
        let k4 = Graph::<f64>::from_edges(4, false, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k_shell(&k4).shell, vec![3.0; 4]);
        let s5 = Graph::<f64>::from_edges(5, false, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(k_shell(&s5).shell, vec![1.0; 5]);
        let r = k_shell(&k4_pendant());
        assert_eq!(r.shell, vec![3.0, 3.0, 3.0, 3.0, 1.0]);
        assert_eq!(r.removal_order[0].0, 4);
        assert!(r.removal_order.windows(2).all(|w| w[0].1 <= w[1].1));
    }

    #[test]
    fn mixed_degree_limits() {
        let g = k4_pendant();
        assert_eq!(mixed_degree(&g, 0.0).unwrap().shell, k_shell(&g).shell);
        assert_eq!(mixed_degree(&g, 1.0).unwrap().shell, vec![3.0, 3.0, 3.0, 4.0, 1.0]);
        let r = mixed_degree(&g, 0.7).unwrap();
        assert_eq!(r.removal_order[0], (4, 1.0));
        assert!(mixed_degree(&g, 1.5).is_err());
    }

    #[test]
    fn coreness_examples() {
        let k3 = Graph::<f64>::from_edges(3, false, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(neighborhood_coreness(&k3, false).unwrap().values, vec![4.0; 3]);
        let s5 = Graph::<f64>::from_edges(5, false, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(neighborhood_coreness(&s5, false).unwrap().values[0], 4.0);
        let c5 = Graph::<f64>::from_edges(5, false, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let v = neighborhood_coreness(&c5, true).unwrap().values;
        assert!(v.iter().all(|&x| x == v[0]));
    }
}
