use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    check_dense_cap, normalize_sum, power_iteration, solve_linear, symmetric_eigen, DenseMatrix, Eigenpair,
};
use crate::params::MetricParams;
use crate::scalar::Scalar;
use crate::score::ScoreVector;

/// `y_v = sum over arcs u -> v of w * x_u`.
pub(crate) fn in_action<T: Scalar>(g: &Graph<T>, x: &[T], y: &mut [T]) {
    for (v, yv) in y.iter_mut().enumerate() {
        *yv = g.in_edges(v).iter().map(|&(u, w)| w * x[u]).sum();
    }
}

/// `y_v = sum over arcs v -> u of w * x_u`.
pub(crate) fn out_action<T: Scalar>(g: &Graph<T>, x: &[T], y: &mut [T]) {
    for (v, yv) in y.iter_mut().enumerate() {
        *yv = g.out_edges(v).iter().map(|&(u, w)| w * x[u]).sum();
    }
}

fn principal<T: Scalar>(g: &Graph<T>, params: &MetricParams, incoming: bool) -> Result<Eigenpair<T>> {
    let tol = T::of(params.tol);
    if incoming {
        power_iteration(g.n(), |x, y| in_action(g, x, y), None, tol, params.max_iter)
    } else {
        power_iteration(g.n(), |x, y| out_action(g, x, y), None, tol, params.max_iter)
    }
}

/// Largest eigenvalue of the (weighted) adjacency matrix.
pub fn spectral_radius<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<T> {
    if g.m() == 0 {
        return Ok(T::zero());
    }
    Ok(principal(g, params, false)?.value)
}

/// Principal eigenvector, unit L2 norm; directed graphs aggregate in-neighbours unless `out_aggregation`.
pub fn eigenvector<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let incoming = g.is_directed() && !params.out_aggregation;
    let e = principal(g, params, incoming)?;
    ScoreVector::new("eigenvector", e.vector, params)
}

/// Solves `(I - alpha A^T) x = beta 1`.
pub fn katz<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    check_dense_cap(n, params.dense_cap)?;
    let lambda = spectral_radius(g, params)?;
    let tiny = T::of(1e-12);
    let alpha = match params.katz_alpha {
        Some(a) => T::of(a),
        None if lambda > tiny => T::of(0.85) / lambda,
        None => T::of(0.85),
    };
    if lambda > tiny && alpha * lambda >= T::one() {
        return Err(Error::KatzAlphaTooLarge {
            alpha: alpha.to_f64_lossy(),
            bound: (T::one() / lambda).to_f64_lossy(),
        });
    }
    let mut m = DenseMatrix::identity(n);
    let outward = g.is_directed() && params.out_aggregation;
    for (u, v, w) in g.edges() {
        let (row, col) = if outward { (u, v) } else { (v, u) };
        m[(row, col)] -= alpha * w;
        if !g.is_directed() {
            m[(u, v)] -= alpha * w;
        }
    }
    let x = solve_linear(&m, &vec![T::of(params.beta); n])?;
    ScoreVector::new("katz", x, params)
}

/// Eigenvector of `A (.) D` with Jaccard dissimilarity `D_uv = 1 - |N(u)^N(v)| / |N(u)vN(v)|`.
pub fn contribution<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.undirected_neighbors(v)).collect();
    let dissim = |u: usize, v: usize| -> T {
        let (a, b) = (&nbrs[u], &nbrs[v]);
        let common = a.iter().filter(|x| b.binary_search(x).is_ok()).count();
        let union = a.len() + b.len() - common;
        T::one() - T::of_usize(common) / T::of_usize(union)
    };
    // incoming weights per node: (u, W_uv)
    let weights: Vec<Vec<(usize, T)>> =
        (0..n).map(|v| g.in_edges(v).iter().map(|&(u, w)| (u, w * dissim(u, v))).collect()).collect();
    let op = |x: &[T], y: &mut [T]| {
        for (v, yv) in y.iter_mut().enumerate() {
            *yv = weights[v].iter().map(|&(u, w)| w * x[u]).sum();
        }
    };
    let e = power_iteration(n, op, None, T::of(params.tol), params.max_iter)?;
    ScoreVector::new("contribution", e.vector, params)
}

/// Left principal eigenvector of A normalised to sum 1.
pub fn dynamical_influence<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let mut c = principal(g, params, true)?.vector;
    normalize_sum(&mut c);
    ScoreVector::new("dynamical-influence", c, params)
}

/// `sum_{t=1}^{T} (q A)^t 1`; `q` defaults to `min(1, 1 / lambda_max)`.
pub fn diffusion<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    let n = g.n();
    let q = match params.q {
        Some(q) => T::of(q),
        None => {
            let lambda = spectral_radius(g, params)?;
            if lambda > T::one() {
                T::one() / lambda
            } else {
                T::one()
            }
        }
    };
    let mut x = vec![T::one(); n];
    let mut y = vec![T::zero(); n];
    let mut acc = vec![T::zero(); n];
    for _ in 0..params.t {
        out_action(g, &x, &mut y);
        for ((xi, &yi), ai) in x.iter_mut().zip(&y).zip(acc.iter_mut()) {
            *xi = q * yi;
            *ai += *xi;
        }
    }
    ScoreVector::new("diffusion", acc, params)
}

/// `sum_j (u_j^v)^2 exp(lambda_j)` from a dense symmetric eigendecomposition.
pub fn subgraph<T: Scalar>(g: &Graph<T>, params: &MetricParams) -> Result<ScoreVector<T>> {
    if g.is_directed() {
        return Err(Error::UndirectedRequired { metric: "subgraph" });
    }
    let n = g.n();
    check_dense_cap(n, params.dense_cap)?;
    let a = DenseMatrix::from_vec(n, g.dense_adjacency());
    let eig = symmetric_eigen(&a)?;
    let mut values = vec![T::zero(); n];
    for (lambda, u) in eig.values.iter().zip(&eig.vectors) {
        let e = lambda.exp();
        for v in 0..n {
            values[v] += u[v] * u[v] * e;
        }
    }
    ScoreVector::new("subgraph", values, params)
}
