//! Higher-order transition probability tensors and their stationary vectors.
//!
//! An order-`m`, dimension-`n` transition probability tensor holds the
//! conditional probabilities `p[i1, i2, …, im] = Prob(X_{t+1} = i1 | X_t = i2,
//! …, X_{t-m+2} = im)` of an `(m − 1)`-order Markov chain. A stationary
//! probability vector is a point `x` of the simplex with
//! `x_i = Σ p[i, i2, …, im] x_{i2} ⋯ x_{im}` for every `i`.
//!
//! The crate is organized around one fully analysed case, the symmetric
//! tensors of dimension two ([`SymmetricFamily2`]), for which the
//! [`analytic`] module enumerates every stationary vector in closed form,
//! and a set of independent numerical routes in [`solvers`] and
//! [`simulator`] that check those answers without sharing code paths with
//! them.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the `tpt` companion crate.

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analytic;
mod error;
pub mod numeric;
pub mod simulator;
pub mod solvers;
pub mod tensor;

pub use analytic::{
    classify, critical_points, enumerate_stationary, CaseLabel, ClassificationReport,
    ReducedPolynomial,
};
pub use error::{Error, Result};
pub use tensor::{
    SimplexPoint, SymmetricFamily2, TransitionModel, TransitionTensor, ValidationReport,
};
