use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("geometric inverse needs a series without constant term, found {monomial}")]
    NonZeroConstant { monomial: String },

    #[error("coefficient of z^{z_deg} is unknown at truncation order {order_z}")]
    OutOfTruncation { z_deg: u32, order_z: u32 },

    #[error("continued fraction depth must be at least 1")]
    ZeroDepth,

    #[error("invalid level weights: {0}")]
    Weights(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("not a permutation of 1..{n}: {message}")]
    NotPermutation { n: usize, message: String },

    #[error("permutation contains a 132 pattern at positions ({}, {}, {})", .0.0, .0.1, .0.2)]
    Contains132((usize, usize, usize)),

    #[error("pattern length k must be at least 1")]
    ZeroPatternLength,
}
