//! Deterministic Edmonds-Karp maximum flow.

use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Residual network; arc `e` and `e ^ 1` are mutual reverses.
#[derive(Debug, Clone)]
pub struct FlowNetwork<T> {
    head: Vec<usize>,
    cap: Vec<T>,
    flow: Vec<T>,
    adj: Vec<Vec<usize>>,
    sorted: bool,
}

impl<T: Scalar> FlowNetwork<T> {
    pub fn new(n: usize) -> Self {
        Self { head: Vec::new(), cap: Vec::new(), flow: Vec::new(), adj: vec![Vec::new(); n], sorted: true }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Arc u -> v with capacity `c`.
    pub fn add_arc(&mut self, u: usize, v: usize, c: T) {
        self.push_pair(u, v, c, T::zero());
    }

    /// Edge usable in both directions with capacity `c`.
    pub fn add_edge(&mut self, u: usize, v: usize, c: T) {
        self.push_pair(u, v, c, c);
    }

    fn push_pair(&mut self, u: usize, v: usize, c_uv: T, c_vu: T) {
        let e = self.head.len();
        self.head.extend([v, u]);
        self.cap.extend([c_uv, c_vu]);
        self.flow.extend([T::zero(), T::zero()]);
        self.adj[u].push(e);
        self.adj[v].push(e + 1);
        self.sorted = false;
    }

    fn residual(&self, e: usize) -> T {
        self.cap[e] - self.flow[e]
    }

    /// Net flow on arc `e` (negative on the reverse arc).
    pub fn arc_flow(&self, e: usize) -> T {
        self.flow[e]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.head.len()).map(move |e| (e, self.head[e ^ 1], self.head[e]))
    }

    pub fn reset(&mut self) {
        self.flow.iter_mut().for_each(|f| *f = T::zero());
    }

    /// Augments along BFS paths scanning neighbours in ascending id; returns the flow value.
    pub fn max_flow(&mut self, s: usize, t: usize) -> T {
        if !self.sorted {
            let head = &self.head;
            for list in &mut self.adj {
                list.sort_by_key(|&e| (head[e], e));
            }
            self.sorted = true;
        }
        let eps = self.eps();
        let n = self.n();
        let mut total = T::zero();
        let mut parent = vec![usize::MAX; n];
        loop {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(v) = queue.pop_front() {
                for &e in &self.adj[v] {
                    let u = self.head[e];
                    if !seen[u] && self.residual(e) > eps {
                        seen[u] = true;
                        parent[u] = e;
                        if u == t {
                            break 'bfs;
                        }
                        queue.push_back(u);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut bottleneck = T::infinity();
            let mut v = t;
            while v != s {
                let e = parent[v];
                bottleneck = bottleneck.min(self.residual(e));
                v = self.head[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = parent[v];
                self.flow[e] += bottleneck;
                self.flow[e ^ 1] -= bottleneck;
                v = self.head[e ^ 1];
            }
            total += bottleneck;
        }
        total
    }

    fn eps(&self) -> T {
        let max_cap = self.cap.iter().copied().fold(T::zero(), T::max);
        T::epsilon() * max_cap * T::of_usize(self.n().max(1))
    }

    /// Nodes reachable from `s` along arcs with residual capacity; after [`Self::max_flow`] this is
    /// the source side of a minimum cut.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let eps = self.eps();
        let mut seen = vec![false; self.n()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &e in &self.adj[v] {
                let u = self.head[e];
                if !seen[u] && self.residual(e) > eps {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Positive inflow per node for the current flow.
    pub fn inflow(&self) -> Vec<T> {
        let mut inflow = vec![T::zero(); self.n()];
        for (e, &f) in self.flow.iter().enumerate() {
            if f > T::zero() {
                inflow[self.head[e]] += f;
            }
        }
        inflow
    }
}

/// Flow value with per-node throughflow and positive net arc flows.
#[derive(Debug, Clone)]
pub struct FlowResult<T> {
    pub value: T,
    pub throughflow: Vec<T>,
    pub edge_flows: Vec<(usize, usize, T)>,
}

/// Network with one arc pair per graph edge; capacities are the weights.
pub fn flow_network<T: Scalar>(g: &Graph<T>) -> FlowNetwork<T> {
    let mut net = FlowNetwork::new(g.n());
    for (u, v, w) in g.edges() {
        if g.is_directed() {
            net.add_arc(u, v, w);
        } else {
            net.add_edge(u, v, w);
        }
    }
    net
}

pub fn max_flow<T: Scalar>(g: &Graph<T>, s: usize, t: usize) -> Result<FlowResult<T>> {
    g.check_node(s)?;
    g.check_node(t)?;
    if s == t {
        return Err(Error::SameSourceSink { node: s });
    }
    let mut net = flow_network(g);
    let value = net.max_flow(s, t);
    let mut throughflow = net.inflow();
    throughflow[s] = value;
    let edge_flows =
        net.arcs().filter(|&(e, _, _)| net.arc_flow(e) > T::zero()).map(|(e, u, v)| (u, v, net.arc_flow(e))).collect();
    Ok(FlowResult { value, throughflow, edge_flows })
}
