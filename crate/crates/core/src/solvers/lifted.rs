use alloc::vec;
use alloc::vec::Vec;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::tensor::TransitionModel;

/// Largest number of window states [`lifted_chain_matrix`] will build.
pub const MAX_LIFTED_STATES: usize = 1 << 20;

/// The first-order chain on windows `(X_t, …, X_{t−m+2})`.
///
/// Window `(i2, …, im)` has index `Σ i_j n^(m−j)` (most recent state most
/// significant) and moves to `(i1, i2, …, i_{m−1})` with probability
/// `p[i1, i2, …, im]`. Each row has exactly `n` stored transitions, one per
/// emitted state `i1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedChain {
    dim: usize,
    window_len: usize,
    states: usize,
    targets: Vec<usize>,
    probs: Vec<f64>,
}

impl LiftedChain {
    pub fn states(&self) -> usize {
        self.states
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(target window, probability)` pairs of row `w`, indexed by the
    /// emitted state.
    pub fn row(&self, w: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let r = w * self.dim..(w + 1) * self.dim;
        self.targets[r.clone()]
            .iter()
            .copied()
            .zip(self.probs[r].iter().copied())
    }

    pub fn window(&self, w: usize) -> Vec<usize> {
        let mut out = vec![0; self.window_len];
        let mut rest = w;
        for slot in out.iter_mut().rev() {
            *slot = rest % self.dim;
            rest /= self.dim;
        }
        out
    }

    pub fn window_index(&self, window: &[usize]) -> usize {
        window.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; self.states]; self.states];
        for (w, row) in out.iter_mut().enumerate() {
            for (t, p) in self.row(w) {
                row[t] += p;
            }
        }
        out
    }

    /// One step of the distribution: `next = dist · P`.
    pub fn step(&self, dist: &[f64]) -> Vec<f64> {
        let mut next = vec![0.0; self.states];
        for (w, &mass) in dist.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            for (t, p) in self.row(w) {
                next[t] += mass * p;
            }
        }
        next
    }

    /// Distribution of the most recent state under a window distribution.
    pub fn marginal(&self, dist: &[f64]) -> Vec<f64> {
        let block = self.states / self.dim;
        (0..self.dim)
            .map(|i| dist[i * block..(i + 1) * block].iter().sum())
            .collect()
    }

    /// Classifies the chain: `SingleAperiodicClass` when exactly one closed
    /// communicating class exists and it has period one.
    pub fn ergodicity(&self) -> Ergodicity {
        let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(self.states, self.targets.len());
        for _ in 0..self.states {
            graph.add_node(());
        }
        for w in 0..self.states {
            for (t, p) in self.row(w) {
                if p > 0.0 {
                    graph.add_edge(NodeIndex::new(w), NodeIndex::new(t), ());
                }
            }
        }
        let sccs = tarjan_scc(&graph);
        let mut component = vec![0usize; self.states];
        for (id, scc) in sccs.iter().enumerate() {
            for node in scc {
                component[node.index()] = id;
            }
        }
        let closed: Vec<usize> = (0..sccs.len())
            .filter(|&id| {
                sccs[id].iter().all(|node| {
                    graph
                        .neighbors(*node)
                        .all(|next| component[next.index()] == id)
                })
            })
            .collect();
        if closed.len() != 1 {
            return Ergodicity::Unknown;
        }
        let members = &sccs[closed[0]];
        let id = closed[0];
        // period = gcd over in-class edges of level(u) + 1 − level(v)
        let mut level = vec![usize::MAX; self.states];
        let start = members[0].index();
        level[start] = 0;
        let mut queue = vec![start];
        let mut head = 0;
        let mut period = 0usize;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for next in graph.neighbors(NodeIndex::new(u)) {
                let v = next.index();
                if component[v] != id {
                    continue;
                }
                if level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push(v);
                } else {
                    let diff = (level[u] + 1).abs_diff(level[v]);
                    period = gcd(period, diff);
                }
            }
        }
        if period == 1 {
            Ergodicity::SingleAperiodicClass
        } else {
            Ergodicity::Unknown
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lifted_chain_matrix<M: TransitionModel + ?Sized>(model: &M) -> Result<LiftedChain> {
    let (m, n) = (model.order(), model.dim());
    let window_len = m - 1;
    let mut states = 1usize;
    for _ in 0..window_len {
        states = states.saturating_mul(n);
    }
    if states > MAX_LIFTED_STATES {
        return Err(Error::SizeLimit {
            what: "lifted chain",
            size: states,
            limit: MAX_LIFTED_STATES,
        });
    }
    let block = states / n;
    let mut targets = Vec::with_capacity(states * n);
    let mut probs = Vec::with_capacity(states * n);
    let mut index = vec![0usize; m];
    for w in 0..states {
        let mut rest = w;
        for slot in index[1..].iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        for i1 in 0..n {
            index[0] = i1;
            targets.push(i1 * block + w / n);
            probs.push(model.entry(&index));
        }
    }
    Ok(LiftedChain {
        dim: n,
        window_len,
        states,
        targets,
        probs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ergodicity {
    SingleAperiodicClass,
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainStationary {
    pub distribution: Vec<f64>,
    /// Distribution of the most recent state.
    pub marginal: Vec<f64>,
    pub ergodicity: Ergodicity,
    pub iterations: usize,
    pub converged: bool,
    /// True once oscillation was detected and the iteration switched to
    /// averaging consecutive iterates.
    pub averaged: bool,
}

pub const MAX_POWER_ITERATIONS: usize = 1_000_000;
const OSCILLATION_WINDOW: usize = 100;

/// Power iteration from the uniform window distribution.
pub fn matrix_stationary(chain: &LiftedChain, tol: f64) -> ChainStationary {
    let start = vec![1.0 / chain.states() as f64; chain.states()];
    matrix_stationary_from(chain, &start, tol, MAX_POWER_ITERATIONS)
}

/// Power iteration `π ← πP` from `start` until the L1 step is at most
/// `tol`. If the step norm fails to decrease for 100 consecutive steps the
/// iteration switches to `π ← (π + πP)/2`, which has the same fixed points
/// and damps periodic oscillation.
pub fn matrix_stationary_from(
    chain: &LiftedChain,
    start: &[f64],
    tol: f64,
    max_iter: usize,
) -> ChainStationary {
    let mut dist = start.to_vec();
    let mut averaged = false;
    let mut converged = false;
    let mut iterations = 0;
    let mut last_step = f64::INFINITY;
    let mut non_decreasing = 0usize;
    while iterations < max_iter {
        iterations += 1;
        let mut next = chain.step(&dist);
        if averaged {
            for (n, d) in next.iter_mut().zip(&dist) {
                *n = 0.5 * (*n + d);
            }
        }
        let step: f64 = next.iter().zip(&dist).map(|(a, b)| (a - b).abs()).sum();
        dist = next;
        if step <= tol {
            converged = true;
            break;
        }
        if step >= last_step {
            non_decreasing += 1;
            if non_decreasing >= OSCILLATION_WINDOW && !averaged {
                averaged = true;
                non_decreasing = 0;
            }
        } else {
            non_decreasing = 0;
        }
        last_step = step;
    }
    ChainStationary {
        marginal: chain.marginal(&dist),
        distribution: dist,
        ergodicity: chain.ergodicity(),
        iterations,
        converged,
        averaged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SymmetricFamily2;

    fn fam(m: usize, a: f64) -> SymmetricFamily2 {
        SymmetricFamily2::new(m, a).unwrap()
    }

    #[test]
    fn rows_are_stochastic() {
        for m in 3..8 {
            for a in [0.0, 0.2, 0.5, 1.0] {
                let chain = lifted_chain_matrix(&fam(m, a)).unwrap();
                for w in 0..chain.states() {
                    let s: f64 = chain.row(w).map(|(_, p)| p).sum();
                    assert!((s - 1.0).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn uniform_family_has_uniform_marginal() {
        for m in [3, 4] {
            let chain = lifted_chain_matrix(&fam(m, 0.5)).unwrap();
            for row in chain.to_dense() {
                for p in row.iter().filter(|&&p| p > 0.0) {
                    assert_eq!(*p, 0.5);
                }
            }
            let s = matrix_stationary(&chain, 1e-12);
            assert!(s.converged);
            assert_eq!(s.ergodicity, Ergodicity::SingleAperiodicClass);
            assert!((s.marginal[0] - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn p1_order_three_has_absorbing_state_and_cycle() {
        let chain = lifted_chain_matrix(&fam(3, 1.0)).unwrap();
        // windows (X_t, X_{t-1}) 0-based: (0,0) absorbing
        let w = |a: usize, b: usize| chain.window_index(&[a, b]);
        let next = |from: usize| chain.row(from).find(|&(_, p)| p == 1.0).unwrap().0;
        assert_eq!(next(w(0, 0)), w(0, 0));
        assert_eq!(next(w(1, 1)), w(0, 1));
        assert_eq!(next(w(0, 1)), w(1, 0));
        assert_eq!(next(w(1, 0)), w(1, 1));

        let from_uniform = matrix_stationary(&chain, 1e-12);
        assert_eq!(from_uniform.ergodicity, Ergodicity::Unknown);
        assert_eq!(from_uniform.marginal, vec![0.5, 0.5]);

        // mass on the cycle alone
        let mut start = vec![0.0; 4];
        start[w(1, 1)] = 1.0;
        let on_cycle = matrix_stationary_from(&chain, &start, 1e-12, MAX_POWER_ITERATIONS);
        assert!(on_cycle.converged && on_cycle.averaged);
        assert!((on_cycle.marginal[0] - 1.0 / 3.0).abs() < 1e-10);
        assert!((on_cycle.marginal[1] - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn window_encoding_round_trips() {
        let chain = lifted_chain_matrix(&fam(5, 0.3)).unwrap();
        for w in 0..chain.states() {
            assert_eq!(chain.window_index(&chain.window(w)), w);
        }
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            lifted_chain_matrix(&fam(22, 0.5)),
            Err(Error::SizeLimit { .. })
        ));
        assert!(lifted_chain_matrix(&fam(21, 0.5)).is_ok());
    }
}
