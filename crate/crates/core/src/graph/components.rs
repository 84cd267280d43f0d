//! Weak and strong connected components.

use super::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Connectivity {
    #[default]
    Weak,
    Strong,
}

/// Component id per node (`usize::MAX` for masked-out nodes) and component sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ComponentLabeling {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn giant(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    /// Members of the largest component (lowest label on ties).
    pub fn giant_members(&self) -> Vec<usize> {
        let Some(best) = (0..self.sizes.len()).max_by_key(|&c| (self.sizes[c], std::cmp::Reverse(c))) else {
            return Vec::new();
        };
        (0..self.labels.len()).filter(|&v| self.labels[v] == best).collect()
    }
}

pub fn components<T: Scalar>(g: &Graph<T>, mode: Connectivity) -> ComponentLabeling {
    components_masked(g, &vec![true; g.n()], mode)
}

/// Components of the subgraph induced by nodes with `alive[v]`.
pub fn components_masked<T: Scalar>(g: &Graph<T>, alive: &[bool], mode: Connectivity) -> ComponentLabeling {
    if mode == Connectivity::Strong && g.is_directed() {
        tarjan(g, alive)
    } else {
        weak(g, alive)
    }
}

/// Size of the largest weak component among alive nodes.
pub fn giant_size_masked<T: Scalar>(g: &Graph<T>, alive: &[bool], mode: Connectivity) -> usize {
    components_masked(g, alive, mode).giant()
}

fn weak<T: Scalar>(g: &Graph<T>, alive: &[bool]) -> ComponentLabeling {
    let n = g.n();
    let mut labels = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if !alive[s] || labels[s] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        labels[s] = c;
        let mut size = 0;
        stack.push(s);
        while let Some(v) = stack.pop() {
            size += 1;
            let next = g.out_edges(v).iter().chain(if g.is_directed() { g.in_edges(v) } else { &[] });
            for &(u, _) in next {
                if alive[u] && labels[u] == usize::MAX {
                    labels[u] = c;
                    stack.push(u);
                }
            }
        }
        sizes.push(size);
    }
    ComponentLabeling { labels, sizes }
}

fn tarjan<T: Scalar>(g: &Graph<T>, alive: &[bool]) -> ComponentLabeling {
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut labels = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut counter = 0;
    // explicit call stack of (node, next arc position)
    let mut calls: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if !alive[root] || index[root] != usize::MAX {
            continue;
        }
        calls.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(v, pos)) = calls.last() {
            let arcs = g.out_edges(v);
            if pos < arcs.len() {
                let u = arcs[pos].0;
                calls.last_mut().unwrap().1 += 1;
                if !alive[u] {
                    continue;
                }
                if index[u] == usize::MAX {
                    index[u] = counter;
                    low[u] = counter;
                    counter += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    calls.push((u, 0));
                } else if on_stack[u] {
                    low[v] = low[v].min(index[u]);
                }
            } else {
                calls.pop();
                if let Some(&(parent, _)) = calls.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let c = sizes.len();
                    let mut size = 0;
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        labels[w] = c;
                        size += 1;
                        if w == v {
                            break;
                        }
                    }
                    sizes.push(size);
                }
            }
        }
    }
    ComponentLabeling { labels, sizes }
}
