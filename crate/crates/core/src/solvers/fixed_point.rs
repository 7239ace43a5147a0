use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tensor::{SimplexPoint, TransitionModel};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationOptions {
    pub tol: f64,
    pub max_iter: usize,
    /// Weight `θ` kept on the previous iterate: `x ← (1 − θ) T(x) + θ x`.
    pub damping: f64,
}

impl Default for IterationOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 10_000,
            damping: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationResult {
    pub iterate: SimplexPoint,
    pub iterations: usize,
    /// Residual of the iterate visited at each iteration.
    pub residual_history: Vec<f64>,
    pub converged: bool,
    /// Geometric mean of successive residual ratios over the last ten
    /// steps; zero when the residual reached exactly zero.
    pub rate_estimate: f64,
}

fn rate_estimate(history: &[f64]) -> f64 {
    let tail = &history[history.len().saturating_sub(11)..];
    let mut log_sum = 0.0;
    let mut count = 0usize;
    for w in tail.windows(2) {
        if w[0] == 0.0 {
            continue;
        }
        if w[1] == 0.0 {
            return 0.0;
        }
        log_sum += libm::log(w[1] / w[0]);
        count += 1;
    }
    if count == 0 {
        0.0
    } else {
        libm::exp(log_sum / count as f64)
    }
}

/// Iterates `x ← (1 − θ)·contract(T, x) + θ·x` from `x0`.
///
/// Each iteration first measures the residual `‖contract(T, x) − x‖∞` of
/// the current iterate; it stops there when the residual is at most `tol`,
/// so a converged result always satisfies the tolerance. Running out of
/// iterations is reported through `converged = false`, not as an error.
pub fn fixed_point_iterate<M: TransitionModel + ?Sized>(
    model: &M,
    x0: &[f64],
    options: IterationOptions,
) -> Result<IterationResult> {
    let theta = options.damping;
    if !(0.0..1.0).contains(&theta) {
        return Err(Error::InvalidOption {
            name: "damping",
            reason: "must lie in [0, 1)",
        });
    }
    if options.max_iter == 0 {
        return Err(Error::InvalidOption {
            name: "max_iter",
            reason: "must be positive",
        });
    }
    // validates x0 against the simplex as a side effect
    model.contract(x0)?;

    let mut x = x0.to_vec();
    let mut history = Vec::new();
    let mut converged = false;
    let mut residual = f64::INFINITY;
    while history.len() < options.max_iter {
        let y = model.contract(&x)?;
        residual = y
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        history.push(residual);
        if residual <= options.tol {
            converged = true;
            break;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = (1.0 - theta) * yi + theta * *xi;
        }
        // The map sends total mass s to s^(m−1); renormalize so rounding
        // drift cannot compound.
        let total: f64 = x.iter().sum();
        x.iter_mut().for_each(|xi| *xi /= total);
    }
    let iterate = SimplexPoint {
        coords: x,
        residual,
    };
    Ok(IterationResult {
        iterate,
        iterations: history.len(),
        rate_estimate: rate_estimate(&history),
        residual_history: history,
        converged,
    })
}
