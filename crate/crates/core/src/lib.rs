//! Exact computations with braid monodromy factorizations of plane affine
//! curves: braid words with Garside normal forms, factorization compilation
//! from diagram files, Zariski-van Kampen presentations, finitely presented
//! group invariants, reduced Burau representations specialized to finite
//! rings, and Hurwitz-orbit equivalence tests for pairs of factorizations.
//!
//! The bundled data reproduces the computation distinguishing the two
//! Eyral-Oka sextic-plus-line arrangements; see the `pipeline` module and
//! the `braidmono` binary.

pub mod burau;
pub mod equivalence;
pub mod fpgroups;
pub mod monodromy;
pub mod pipeline;
pub mod structural;
pub mod words;
pub mod zvk;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("generator index {index} out of range for {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid word syntax: {0}")]
    WordSyntax(String),
    #[error("malformed diagram: {0}")]
    Diagram(String),
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(u64, u64),
    #[error("matrix is not invertible modulo {0}")]
    NotInvertible(u64),
    #[error("closure size cap {0} exceeded")]
    ClosureCapExceeded(usize),
    #[error("orbit size cap {0} exceeded")]
    OrbitCapExceeded(usize),
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("matrix outside the ambient finite group")]
    OutsideGroup,
    #[error("missing decomposition data for entry {0}")]
    MissingDecomposition(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
