//! Seeded sampling of the `(m − 1)`-order chain and empirical frequencies.
//!
//! The generator is SplitMix64 seeded directly with the user seed. Each
//! step draws one 64-bit word `r`, forms `u = (r >> 11) · 2^−53 ∈ [0, 1)`,
//! and emits the first state `i` whose cumulative probability
//! `Σ_{j<=i} p[j, window]` exceeds `u`. Both the generator and this
//! transform are fixed, so traces are bit-identical across platforms.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::analytic::enumerate_stationary;
use crate::error::{Error, Result};
use crate::solvers::{
    fixed_point_iterate, lifted_chain_matrix, matrix_stationary, ChainStationary, IterationOptions,
    IterationResult,
};
use crate::tensor::{SimplexPoint, SymmetricFamily2, TransitionModel};

/// A sampled path: the initial window followed by `steps` generated states,
/// oldest first, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTrace {
    pub states: Vec<usize>,
    pub seed: u64,
    pub initial_window: Vec<usize>,
    pub steps: usize,
    pub dim: usize,
}

impl ChainTrace {
    /// The generated states, without the initial window.
    pub fn generated(&self) -> &[usize] {
        &self.states[self.initial_window.len()..]
    }
}

fn unit_f64(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Samples `steps` states. `initial_window` lists the `m − 1` states that
/// precede the first draw, oldest first.
pub fn sample_chain<M: TransitionModel + ?Sized>(
    model: &M,
    initial_window: &[usize],
    steps: usize,
    seed: u64,
) -> Result<ChainTrace> {
    let (m, n) = (model.order(), model.dim());
    if initial_window.len() != m - 1 {
        return Err(Error::LengthMismatch {
            expected: m - 1,
            got: initial_window.len(),
        });
    }
    if let Some(&state) = initial_window.iter().find(|&&s| s >= n) {
        return Err(Error::StateOutOfRange { state, dim: n });
    }
    if steps == 0 {
        return Err(Error::InvalidOption {
            name: "steps",
            reason: "must be at least 1",
        });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut states = Vec::with_capacity(steps + m - 1);
    states.extend_from_slice(initial_window);
    // index = [i1, X_t, X_{t-1}, …, X_{t-m+2}]
    let mut index = vec![0usize; m];
    for (slot, &s) in index[1..].iter_mut().zip(initial_window.iter().rev()) {
        *slot = s;
    }
    for _ in 0..steps {
        let u = unit_f64(&mut rng);
        let mut cumulative = 0.0;
        let mut chosen = None;
        let mut last_positive = 0;
        for i1 in 0..n {
            index[0] = i1;
            let p = model.entry(&index);
            if p > 0.0 {
                last_positive = i1;
            }
            cumulative += p;
            if u < cumulative {
                chosen = Some(i1);
                break;
            }
        }
        let next = chosen.unwrap_or(last_positive);
        states.push(next);
        index.copy_within(1..m - 1, 2);
        index[1] = next;
    }
    Ok(ChainTrace {
        states,
        seed,
        initial_window: initial_window.to_vec(),
        steps,
        dim: n,
    })
}

/// State counts over the generated part of a trace after a burn-in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Empirical {
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Empirical {
    pub fn frequencies(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| c as f64 / self.total as f64)
            .collect()
    }
}

pub fn empirical_distribution(trace: &ChainTrace, burn_in: usize) -> Result<Empirical> {
    if burn_in >= trace.steps {
        return Err(Error::InvalidOption {
            name: "burn_in",
            reason: "must be smaller than the number of steps",
        });
    }
    let mut counts = vec![0u64; trace.dim];
    for &s in &trace.generated()[burn_in..] {
        counts[s] += 1;
    }
    Ok(Empirical {
        total: (trace.steps - burn_in) as u64,
        counts,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonOptions {
    pub steps: usize,
    pub seed: u64,
    /// Defaults to 10% of `steps`.
    pub burn_in: Option<usize>,
    /// Start of the fixed-point iteration.
    pub x0: [f64; 2],
    /// Defaults to all states equal to the first state.
    pub initial_window: Option<Vec<usize>>,
}

impl Default for ComparisonOptions {
    fn default() -> Self {
        Self {
            steps: 100_000,
            seed: 0,
            burn_in: None,
            x0: [0.75, 0.25],
            initial_window: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Deviation {
    pub left: &'static str,
    pub right: &'static str,
    /// Max-norm distance between the two vectors.
    pub value: f64,
}

/// Four views of the same family side by side. Nothing here asserts that
/// they agree; the deviations are measurements.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub analytic: Vec<SimplexPoint>,
    pub fixed_point: IterationResult,
    /// `None` when the window chain exceeds the size cap.
    pub lifted: Option<ChainStationary>,
    pub empirical: Empirical,
    pub burn_in: usize,
    pub deviations: Vec<Deviation>,
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn compare_report(
    family: &SymmetricFamily2,
    options: &ComparisonOptions,
) -> Result<ComparisonReport> {
    let analytic = enumerate_stationary(family);
    let fixed_point = fixed_point_iterate(family, &options.x0, IterationOptions::default())?;
    let lifted = match lifted_chain_matrix(family) {
        Ok(chain) => Some(matrix_stationary(&chain, 1e-12)),
        Err(Error::SizeLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let window = options
        .initial_window
        .clone()
        .unwrap_or_else(|| vec![0; family.order() - 1]);
    let trace = sample_chain(family, &window, options.steps, options.seed)?;
    let burn_in = options.burn_in.unwrap_or(options.steps / 10);
    let empirical = empirical_distribution(&trace, burn_in)?;

    let fp = fixed_point.iterate.coords.clone();
    let emp = empirical.frequencies();
    let nearest_analytic = |v: &[f64]| {
        analytic
            .iter()
            .map(|p| max_dev(&p.coords, v))
            .fold(f64::INFINITY, f64::min)
    };
    let mut deviations = vec![
        Deviation {
            left: "fixed_point",
            right: "empirical",
            value: max_dev(&fp, &emp),
        },
        Deviation {
            left: "analytic_nearest",
            right: "empirical",
            value: nearest_analytic(&emp),
        },
    ];
    if let Some(l) = &lifted {
        deviations.push(Deviation {
            left: "fixed_point",
            right: "lifted",
            value: max_dev(&fp, &l.marginal),
        });
        deviations.push(Deviation {
            left: "lifted",
            right: "empirical",
            value: max_dev(&l.marginal, &emp),
        });
        deviations.push(Deviation {
            left: "analytic_nearest",
            right: "lifted",
            value: nearest_analytic(&l.marginal),
        });
    }
    Ok(ComparisonReport {
        analytic,
        fixed_point,
        lifted,
        empirical,
        burn_in,
        deviations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(m: usize, a: f64) -> SymmetricFamily2 {
        SymmetricFamily2::new(m, a).unwrap()
    }

    #[test]
    fn generator_is_reference_splitmix64() {
        // Reference SplitMix64 written out independently.
        fn reference(state: &mut u64) -> u64 {
            *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = *state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        }
        for seed in [0u64, 1, 42, u64::MAX] {
            let mut rng = SplitMix64::seed_from_u64(seed);
            let mut state = seed;
            for _ in 0..5 {
                assert_eq!(rng.next_u64(), reference(&mut state));
            }
        }
    }

    #[test]
    fn absorbing_window() {
        let t = sample_chain(&fam(3, 1.0), &[0, 0], 1000, 7).unwrap();
        assert!(t.states.iter().all(|&s| s == 0));
        assert_eq!(t.states.len(), 1002);
    }

    #[test]
    fn deterministic_cycle() {
        let t = sample_chain(&fam(3, 1.0), &[1, 1], 9, 123).unwrap();
        assert_eq!(t.generated(), &[0, 1, 1, 0, 1, 1, 0, 1, 1]);
        let e = empirical_distribution(&t, 0).unwrap();
        assert_eq!(e.counts, vec![3, 6]);
        assert_eq!(e.total, 9);
    }

    #[test]
    fn same_seed_same_trace() {
        let f = fam(5, 0.3);
        let a = sample_chain(&f, &[0, 1, 0, 1], 5000, 99).unwrap();
        let b = sample_chain(&f, &[0, 1, 0, 1], 5000, 99).unwrap();
        let c = sample_chain(&f, &[0, 1, 0, 1], 5000, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.states, c.states);
        // dense and implicit models draw identically
        let d = sample_chain(&f.materialize().unwrap(), &[0, 1, 0, 1], 5000, 99).unwrap();
        assert_eq!(a.states, d.states);
    }

    #[test]
    fn window_orientation() {
        // m = 4, P1: history (X_t, X_{t-1}, X_{t-2}) = (2, 1, 1) has one two;
        // p[1, 2, 1, 1] = b = 0, so the next state must be 2.
        let t = sample_chain(&fam(4, 1.0), &[0, 0, 1], 1, 5).unwrap();
        assert_eq!(t.generated(), &[1]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            sample_chain(&fam(4, 0.5), &[0, 0], 10, 1),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            sample_chain(&fam(3, 0.5), &[0, 2], 10, 1),
            Err(Error::StateOutOfRange { .. })
        ));
        let t = sample_chain(&fam(3, 0.5), &[0, 0], 10, 1).unwrap();
        assert!(empirical_distribution(&t, 10).is_err());
        let all_one = ChainTrace {
            states: vec![0; 12],
            seed: 0,
            initial_window: vec![0, 0],
            steps: 10,
            dim: 2,
        };
        assert_eq!(
            empirical_distribution(&all_one, 0).unwrap().frequencies(),
            vec![1.0, 0.0]
        );
    }

    #[test]
    fn comparison_bundles_every_view() {
        let opts = ComparisonOptions {
            steps: 20_000,
            seed: 3,
            ..Default::default()
        };
        let r = compare_report(&fam(4, 0.8), &opts).unwrap();
        assert_eq!(r.burn_in, 2000);
        assert_eq!(r.empirical.total, 18_000);
        assert!(r.lifted.is_some());
        assert_eq!(r.deviations.len(), 5);
        assert!(r.fixed_point.converged);
    }
}
