use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{normalize_l2, normalize_sum};
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

fn max_gap<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |m, (&x, &y)| m.max((x - y).abs()))
}

fn tolerance<T: Scalar>(params: &MetricParams) -> T {
    T::of(params.tol).max(T::tol_floor())
}

fn require_directed<T: Scalar>(g: &Graph<T>, metric: &'static str) -> Result<()> {
    if g.is_directed() {
        Ok(())
    } else {
        Err(Error::DirectedRequired { metric })
    }
}

/// `x_v = alpha * sum_{u -> v} x_u / max(outdeg(u), 1) + beta`, Jacobi iteration on the 0/1 structure.
pub fn pagerank<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    let alpha = T::of(params.pagerank_alpha);
    let beta = T::of(params.beta);
    let tol = tolerance::<T>(params);
    let share: Vec<T> = (0..n).map(|u| T::one() / T::of_usize(g.out_degree(u).max(1))).collect();
    let mut x = vec![beta; n];
    let mut next = vec![T::zero(); n];
    let mut gap = T::infinity();
    for _ in 0..params.max_iter {
        for (v, nv) in next.iter_mut().enumerate() {
            let s: T = g.in_edges(v).iter().map(|&(u, _)| x[u] * share[u]).sum();
            *nv = alpha * s + beta;
        }
        gap = max_gap(&x, &next);
        std::mem::swap(&mut x, &mut next);
        let scale = x.iter().fold(T::one(), |m, &v| m.max(v.abs()));
        if gap <= tol * scale {
            if params.normalized {
                normalize_sum(&mut x);
            }
            return ScoreVector::new("pagerank", x, params);
        }
    }
    Err(Error::NonConvergence { iterations: params.max_iter, residual: gap.to_f64_lossy() })
}

/// Authority and hub vectors by alternating `a = A^T h`, `h = A a` with L2 normalisation.
///
/// Stops at `hits_max_iter` and returns the current iterate with a warning.
pub fn hits<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<(ScoreVector<T>, ScoreVector<T>)> {
    require_directed(g, "hits")?;
    let n = g.n();
    if g.m() == 0 {
        log::warn!("hits: graph has no edges, returning uniform scores");
        let u = T::one() / T::of_usize(n.max(1)).sqrt();
        return Ok((ScoreVector::new("authority", vec![u; n], params)?, ScoreVector::new("hub", vec![u; n], params)?));
    }
    let tol = tolerance::<T>(params);
    let mut a = vec![T::one(); n];
    let mut h = vec![T::one(); n];
    normalize_l2(&mut a);
    normalize_l2(&mut h);
    let mut na = vec![T::zero(); n];
    let mut nh = vec![T::zero(); n];
    let mut converged = false;
    for _ in 0..params.hits_max_iter {
        for (v, x) in na.iter_mut().enumerate() {
            *x = g.in_edges(v).iter().map(|&(u, _)| h[u]).sum();
        }
        normalize_l2(&mut na);
        for (v, x) in nh.iter_mut().enumerate() {
            *x = g.out_edges(v).iter().map(|&(u, _)| na[u]).sum();
        }
        normalize_l2(&mut nh);
        let gap = max_gap(&a, &na).max(max_gap(&h, &nh));
        std::mem::swap(&mut a, &mut na);
        std::mem::swap(&mut h, &mut nh);
        if gap <= tol {
            converged = true;
            break;
        }
    }
    if !converged {
        log::warn!("hits: stopped after {} iterations", params.hits_max_iter);
    }
    Ok((ScoreVector::new("authority", a, params)?, ScoreVector::new("hub", h, params)?))
}

/// Stationary distributions of the two-step authority and hub chains on the bipartite expansion.
///
/// Each side sums to 1; nodes without an in-edge (authority) or out-edge (hub) score 0.
pub fn salsa<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<(ScoreVector<T>, ScoreVector<T>)> {
    require_directed(g, "salsa")?;
    let n = g.n();
    let tol = tolerance::<T>(params);
    let indeg: Vec<T> = (0..n).map(|v| T::of_usize(g.in_degree(v))).collect();
    let outdeg: Vec<T> = (0..n).map(|v| T::of_usize(g.out_degree(v))).collect();
    // authority chain: u_a -> x_h (x -> u) -> v_a (x -> v)
    let auth_step = |p: &[T], out: &mut [T]| {
        let mut hub_mass = vec![T::zero(); n];
        for (u, &pu) in p.iter().enumerate() {
            if pu > T::zero() {
                let share = pu / indeg[u];
                for &(x, _) in g.in_edges(u) {
                    hub_mass[x] += share;
                }
            }
        }
        for (v, o) in out.iter_mut().enumerate() {
            *o = g.in_edges(v).iter().map(|&(x, _)| hub_mass[x] / outdeg[x]).sum();
        }
    };
    // hub chain: u_h -> x_a (u -> x) -> v_h (v -> x)
    let hub_step = |p: &[T], out: &mut [T]| {
        let mut auth_mass = vec![T::zero(); n];
        for (u, &pu) in p.iter().enumerate() {
            if pu > T::zero() {
                let share = pu / outdeg[u];
                for &(x, _) in g.out_edges(u) {
                    auth_mass[x] += share;
                }
            }
        }
        for (v, o) in out.iter_mut().enumerate() {
            *o = g.out_edges(v).iter().map(|&(x, _)| auth_mass[x] / indeg[x]).sum();
        }
    };
    let authority = stationary(n, |v| g.in_degree(v) > 0, auth_step, tol, params.hits_max_iter, "salsa-authority");
    let hub = stationary(n, |v| g.out_degree(v) > 0, hub_step, tol, params.hits_max_iter, "salsa-hub");
    Ok((ScoreVector::new("salsa-authority", authority, params)?, ScoreVector::new("salsa-hub", hub, params)?))
}

fn stationary<T: Scalar>(
    n: usize,
    on_side: impl Fn(usize) -> bool,
    mut step: impl FnMut(&[T], &mut [T]),
    tol: T,
    max_iter: usize,
    metric: &str,
) -> Vec<T> {
    let side = (0..n).filter(|&v| on_side(v)).count();
    if side == 0 {
        return vec![T::zero(); n];
    }
    let init = T::one() / T::of_usize(side);
    let mut p: Vec<T> = (0..n).map(|v| if on_side(v) { init } else { T::zero() }).collect();
    let mut next = vec![T::zero(); n];
    for _ in 0..max_iter {
        step(&p, &mut next);
        normalize_sum(&mut next);
        let gap = max_gap(&p, &next);
        std::mem::swap(&mut p, &mut next);
        if gap <= tol {
            return p;
        }
    }
    log::warn!("{metric}: stopped after {max_iter} iterations");
    p
}

/// One LeaderRank redistribution step over the graph plus a ground node (index `n`).
pub fn leader_rank_step<T: Scalar>(g: &Graph<T>, s: &[T], out: &mut [T]) {
    let n = g.n();
    let ground_share = s[n] / T::of_usize(n);
    let mut ground = T::zero();
    let share: Vec<T> = (0..n).map(|u| s[u] / T::of_usize(g.out_degree(u) + 1)).collect();
    for v in 0..n {
        out[v] = ground_share + g.in_edges(v).iter().map(|&(u, _)| share[u]).sum::<T>();
        ground += share[v];
    }
    out[n] = ground;
}

/// `s_v(t_e) + s_g(t_e) / n` after iterating to equilibrium from unit scores.
pub fn leader_rank<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    require_directed(g, "leader-rank")?;
    let n = g.n();
    if n == 0 {
        return ScoreVector::new("leader-rank", Vec::new(), params);
    }
    if g.m() == 0 {
        // the ground star is bipartite; its stationary state splits the mass evenly with the ground
        return ScoreVector::new("leader-rank", vec![T::one(); n], params);
    }
    let tol = tolerance::<T>(params);
    let mut s = vec![T::one(); n + 1];
    s[n] = T::zero();
    let mut next = vec![T::zero(); n + 1];
    let mut gap = T::infinity();
    for _ in 0..params.max_iter {
        leader_rank_step(g, &s, &mut next);
        gap = max_gap(&s, &next);
        std::mem::swap(&mut s, &mut next);
        if gap <= tol {
            let bonus = s[n] / T::of_usize(n);
            s.truncate(n);
            s.iter_mut().for_each(|x| *x += bonus);
            return ScoreVector::new("leader-rank", s, params);
        }
    }
    Err(Error::NonConvergence { iterations: params.max_iter, residual: gap.to_f64_lossy() })
}

/// Fixed point of `p <- (p + A^T p) / |p + A^T p|_1` on the 0/1 structure, starting from unit nominations.
pub fn cumulative_nomination<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    let tol = tolerance::<T>(params);
    let mut p = vec![T::one(); n];
    normalize_sum(&mut p);
    let mut next = vec![T::zero(); n];
    let mut gap = T::infinity();
    for _ in 0..params.max_iter {
        for (v, x) in next.iter_mut().enumerate() {
            *x = p[v] + g.in_edges(v).iter().map(|&(u, _)| p[u]).sum::<T>();
        }
        normalize_sum(&mut next);
        gap = max_gap(&p, &next);
        std::mem::swap(&mut p, &mut next);
        if gap <= tol {
            return ScoreVector::new("cumulative-nomination", p, params);
        }
    }
    Err(Error::NonConvergence { iterations: params.max_iter, residual: gap.to_f64_lossy() })
}
