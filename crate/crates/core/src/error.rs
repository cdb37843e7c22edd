use thiserror::Error;

use crate::fock::{Component, FockIndex, Ladder};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Fock index ({}, {}) lies outside the truncation n1 <= {n1_max}, n2 <= {n2_max}", index.n1, index.n2)]
    OutOfRange {
        index: FockIndex,
        n1_max: usize,
        n2_max: usize,
    },

    #[error("{op} on component {component} at ({}, {}) leaves the truncation", index.n1, index.n2)]
    LadderOverflow {
        op: Ladder,
        component: Component,
        index: FockIndex,
    },

    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("truncation must be square (n1_max = n2_max), got {n1_max} x {n2_max}")]
    NonSquareTruncation { n1_max: usize, n2_max: usize },

    #[error("matrix is not diagonalizable within tolerance: {0}")]
    NotDiagonalizable(String),

    #[error("sector n2 = {n2} sits on an exceptional point (V^2 = {v_sq}); eigenvectors coalesce")]
    ExceptionalSector { n2: usize, v_sq: f64 },

    #[error("vector lies in the kernel of the intertwiner (norm {0:e})")]
    Kernel(f64),

    #[error("intertwining relation violated: residual {0:e}")]
    IntertwiningViolated(f64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
