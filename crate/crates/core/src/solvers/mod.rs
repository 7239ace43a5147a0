//! Numerical routes that do not rely on the closed form: a sign-scan root
//! finder, fixed-point iteration of the stationary map for any dimension,
//! and the first-order chain on state windows.

mod fixed_point;
mod lifted;
mod roots;

pub use fixed_point::{fixed_point_iterate, IterationOptions, IterationResult};
pub use lifted::{
    lifted_chain_matrix, matrix_stationary, matrix_stationary_from, ChainStationary, Ergodicity,
    LiftedChain, MAX_LIFTED_STATES, MAX_POWER_ITERATIONS,
};
pub use roots::{
    root_scan, Bracket, BracketKind, RootScanOptions, RootSet, BISECTION_WIDTH, ROOT_MERGE_TOL,
};
