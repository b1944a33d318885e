//! Error types shared by every module in the crate.

use thiserror::Error;

use crate::backends::BackendId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain (bad n, nonpositive value, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Direct partition summation requested above the cycle-type cap.
    #[error(
        "capacity error: n = {n} exceeds the cycle-type cap {cap}; \
         use the landsberg or park_kim backend for this n"
    )]
    Capacity { n: u32, cap: u32 },

    /// A recurrence entry left the representable floating-point range.
    #[error(
        "{backend} backend left f64 range at index {index} (n = {n}, q1 = {q1}); \
         the park_kim backend evaluates this point in log space"
    )]
    Overflow {
        backend: BackendId,
        index: u32,
        n: u32,
        q1: f64,
    },

    /// A non-finite value appeared where the mathematics guarantees one.
    #[error("numeric error in {context}: {detail}")]
    Numeric { context: String, detail: String },

    /// A finite-difference step too small for the working precision.
    #[error("numeric warning: {0}")]
    StepCancellation(String),

    /// Critical-point search failed to bracket an interior maximum.
    #[error("search error: {0}")]
    Search(String),
}
