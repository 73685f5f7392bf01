//! Statistics of two-fermion composite bosons (cobosons) under beam-splitter
//! dynamics.
//!
//! The crate is organised bottom-up:
//!
//! - [`schmidt`]: Schmidt coefficient distributions, purity, the peaked and
//!   uniform extremal families.
//! - [`symfunc`]: normalization factors `chi_N` (scaled elementary symmetric
//!   polynomials) in log domain, their ratios, and the generalized `Omega`
//!   polynomials over exponent patterns `{2^a, 1^b}`.
//! - [`ladder`]: commutator expectation and the orthogonal-remainder norm of
//!   the coboson Fock ladder.
//! - [`splitting`]: one balanced beam-splitter acting on `|N, 0>`.
//! - [`interference`]: two-mode Fock amplitudes, fermion/boson superposition
//!   weights and coboson-coboson interference.
//! - [`cascade`]: the three-sublattice double beam-splitter with
//!   post-selection.
//! - [`oracle`]: an exact sparse simulator of bifermions as hardcore bosons,
//!   used as ground truth for everything above.
//! - [`validate`] and [`figures`]: the analytic-vs-oracle suite and the
//!   parameter sweeps behind the CLI.

#![forbid(unsafe_code)]

pub mod cascade;
mod error;
pub mod figures;
pub mod interference;
pub mod ladder;
mod math;
pub mod oracle;
mod outcome;
pub mod schmidt;
pub mod splitting;
pub mod symfunc;
pub mod validate;

pub use cascade::TripleOutcome;
pub use error::{Error, Result};
pub use interference::BeamSplitterConvention;
pub use interference::WeightVector;
pub use math::binomial;
pub use oracle::SparseState;
pub use outcome::OutcomeDistribution;
pub use schmidt::SchmidtDistribution;
pub use splitting::SplitDecomposition;
pub use symfunc::{ChiTable, ExponentPattern, NormalizationRatio};
