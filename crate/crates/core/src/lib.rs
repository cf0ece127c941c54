//! Exact-arithmetic toolkit for the general symplectic group `GSp(2n)`.
//!
//! Everything here is computed over the rationals with no floating point:
//!
//! - [`root_data`]: the type-`C_n` root datum with similitude character,
//!   its Weyl group of signed permutations, inversion sets and minimal
//!   coset representatives.
//! - [`endoscopy`]: the discrete classification of elliptic endoscopic
//!   data and cuspidal Levi subgroups, with all attached constants
//!   (Tamagawa numbers, normalizer orders, transfer constants) and the
//!   Levi/endoscopy double-counting identity.
//! - [`laurent`] / [`satake`]: a multivariate Laurent-polynomial engine
//!   with a tracked formal prime power, realizing the explicit spherical
//!   transforms and their factorization identities.
//! - [`cohomology`] / [`ce_oracle`]: nilradical Lie-algebra cohomology via
//!   minimal-length representatives, its truncations, and an independent
//!   Chevalley-Eilenberg oracle at small rank.
//! - [`partitions`] / [`identities`]: signed ordered set partitions with
//!   positivity constraints and brute-force verifiers for the whole family
//!   of partition identities.
//! - [`verify`]: deterministic, seedable verification suites with
//!   machine-readable reports.

pub mod arith;
pub mod ce_oracle;
pub mod cohomology;
pub mod endoscopy;
pub mod identities;
pub mod laurent;
pub mod partitions;
pub mod root_data;
pub mod satake;
pub mod verify;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("torus element is not regular: root {0} takes value 1")]
    NonRegularElement(String),
    #[error("weight is not dominant")]
    NonDominant,
    #[error("no elliptic maximal torus: odd orthogonal rank {0}")]
    OddOrthogonalRank(usize),
    #[error("input is not cuspidal: {0}")]
    NonCuspidal(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
