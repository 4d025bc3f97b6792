//! Projective decomposition of real matrices.
//!
//! A real m×n matrix `A` factors as `A = sigma * D_alpha * W * D_beta`, where
//! `sigma` is the root-mean-square of the entries of `A`, `alpha` and `beta`
//! are strictly positive row and column scaling factors, and `W` is the
//! *scale-invariant form* of `A`: every row, every column, and the matrix as
//! a whole have unit RMS. Two matrices related by positive diagonal scalings
//! (`D_q B = A D_p`) share the same `W`, so `W` is the canonical member of
//! the equivalence class of `A` up to scale, and it preserves all pairwise
//! relative ratios of the original entries.
//!
//! The factorization is computed by iterative proportional scaling, a
//! Sinkhorn-Knopp style sweep that alternately rescales rows and columns
//! until the RMS constraints hold. [`solver::sinkhorn_decompose`] provides an
//! independent second route (classic sum balancing on the elementwise square)
//! for cross-checking.
//!
//! Module map:
//! - [`matrix`]: dense/sparse matrix storage, RMS measures, diagonal scaling.
//! - [`solver`]: the decomposition itself plus convergence diagnostics.
//! - [`support`]: total-support classification of square sparsity patterns.
//! - [`equivalence`]: scale-equivalence decisions, witnesses, ratio checks.
//! - [`baselines`]: z-transformation, log+z, and polar conversion.
//! - [`datagen`]: deterministic synthetic point-cloud generators.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm`
//! feature instead of `std` for no_std targets. All operations are pure
//! functions over immutable values and are safe to call concurrently.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("projdec-core needs either the `std` or the `libm` feature");

extern crate alloc;

mod error;
mod fp;

pub mod baselines;
pub mod datagen;
pub mod equivalence;
pub mod matrix;
pub mod rng;
pub mod solver;
pub mod support;

pub use error::Error;
pub use matrix::{Matrix, ScalingVector};
pub use solver::{
    decompose, gauge_fix, precheck, reconstruct, residual, sinkhorn_decompose, ConvergenceReport,
    Decomposition, Defect, GaugeFix, GaugePolicy, SolveStatus, SolverConfig,
};
pub use support::{check_support, SupportClass, SupportDiagnosis};
