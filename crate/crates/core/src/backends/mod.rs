//! Three independent evaluators for the canonical partition function.
//!
//! Each backend computes, for the same (N, Q₁), the logarithm of
//! Z_N = Q_N / N! together with the ratios Z′_N/Z_N and Z″_N/Z_N, where the
//! primes are derivatives with respect to Q₁:
//!
//! - [`eval_matsubara`]: direct summation over every cycle type of N.
//!   Exact in structure, practical while P(N) stays desk-scale.
//! - [`eval_landsberg`]: the O(N²) recurrence
//!   Z_N = (Q₁/N) Σ_{l=1..N} Z_{N-l} / l^(3/2) in plain floating point.
//!   Fast, but Z_N itself must fit in f64.
//! - [`eval_park_kim`]: the same recurrence rewritten for the per-particle
//!   factors f_n = Z_n/Z_{n-1}, evaluated entirely through differences of
//!   log-prefix sums. Only ratios are ever exponentiated, so it reaches
//!   N = 10⁵ and beyond.
//!
//! Agreement of all three to better than 1e-9 relative is part of the test
//! gate; any drift flags a transcription error immediately.

mod landsberg;
mod matsubara;
mod park_kim;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use landsberg::eval_landsberg;
pub use matsubara::{eval_matsubara, eval_matsubara_with_cap};
pub use park_kim::{eval_park_kim, RatioRecursionState};

/// Auto policy uses direct summation up to this n.
const MATSUBARA_AUTO_LIMIT: u32 = 60;
/// Auto policy considers the plain-float recurrence up to this n.
const LANDSBERG_AUTO_LIMIT: u32 = 1000;
/// Magnitude headroom below ln(f64::MAX) ≈ 709.8.
const OVERFLOW_GUARD_LN: f64 = 700.0;

/// Identifies which algorithm produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BackendId {
    Matsubara,
    Landsberg,
    ParkKim,
}

impl BackendId {
    pub const ALL: [BackendId; 3] = [BackendId::Matsubara, BackendId::Landsberg, BackendId::ParkKim];

    pub fn name(self) -> &'static str {
        match self {
            BackendId::Matsubara => "matsubara",
            BackendId::Landsberg => "landsberg",
            BackendId::ParkKim => "park_kim",
        }
    }
}

impl fmt::Display for BackendId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BackendId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matsubara" => Ok(BackendId::Matsubara),
            "landsberg" => Ok(BackendId::Landsberg),
            "park_kim" | "park-kim" => Ok(BackendId::ParkKim),
            other => Err(Error::Domain(format!(
                "unknown backend '{other}' (expected matsubara, landsberg, or park_kim)"
            ))),
        }
    }
}

/// How to choose a backend for an evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendPolicy {
    /// Pick by n and a cheap overflow estimate; see [`select_backend`].
    Auto,
    /// Use exactly this backend or fail.
    Forced(BackendId),
}

/// Dimensionless single-particle partition function Q₁ = V/Λ³.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Q1Value(f64);

impl Q1Value {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::Domain(format!(
                "q1 must be positive and finite, got {value}"
            )))
        }
    }

    /// Q₁ from the phase-space density ρΛ³ = N/Q₁.
    pub fn from_rho_lambda3(n: u32, rho_lambda3: f64) -> Result<Self> {
        if !(rho_lambda3.is_finite() && rho_lambda3 > 0.0) {
            return Err(Error::Domain(format!(
                "rho_lambda3 must be positive and finite, got {rho_lambda3}"
            )));
        }
        Self::new(f64::from(n) / rho_lambda3)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The phase-space density ρΛ³ = N/Q₁ this Q₁ corresponds to.
    pub fn rho_lambda3(self, n: u32) -> f64 {
        f64::from(n) / self.0
    }
}

/// One backend evaluation at a point (n, Q₁).
#[derive(Clone, Copy, Debug)]
pub struct ZEval {
    pub n: u32,
    pub q1: Q1Value,
    /// ln Z_N.
    pub log_z: f64,
    /// Z′_N / Z_N; strictly positive (every term of Z_N has Q₁-degree ≥ 1).
    pub ratio1: f64,
    /// Z″_N / Z_N; zero exactly when n = 1.
    pub ratio2: f64,
    pub backend: BackendId,
}

/// Chooses a backend for (n, q1) under the given policy.
///
/// Auto picks direct summation for n ≤ 60, the plain-float recurrence for
/// n ≤ 1000 when a magnitude estimate says Z″_N clears the f64 range, and
/// the log-space ratio recursion otherwise. Forcing the summation backend
/// above its cycle-type cap is a capacity error.
pub fn select_backend(n: u32, q1: Q1Value, policy: BackendPolicy) -> Result<BackendId> {
    if n == 0 {
        return Err(Error::Domain("backend selection needs n >= 1".into()));
    }
    match policy {
        BackendPolicy::Forced(BackendId::Matsubara)
            if n > crate::combinatorics::DEFAULT_MATSUBARA_CAP =>
        {
            Err(Error::Capacity {
                n,
                cap: crate::combinatorics::DEFAULT_MATSUBARA_CAP,
            })
        }
        BackendPolicy::Forced(backend) => Ok(backend),
        BackendPolicy::Auto => {
            if n <= MATSUBARA_AUTO_LIMIT {
                Ok(BackendId::Matsubara)
            } else if n <= LANDSBERG_AUTO_LIMIT && landsberg_magnitude_ok(n, q1) {
                Ok(BackendId::Landsberg)
            } else {
                Ok(BackendId::ParkKim)
            }
        }
    }
}

/// Cheap screen for whether the plain-float recurrence stays in range.
///
/// The largest entry it holds is roughly the classical dominant term
/// ln Z ≈ N (1 + ln(Q₁/N)), and Z″ exceeds Z by about (N/Q₁)² on top.
fn landsberg_magnitude_ok(n: u32, q1: Q1Value) -> bool {
    let n_f = f64::from(n);
    let ln_q1 = q1.value().ln();
    let ln_z_peak = n_f * (1.0 + ln_q1 - n_f.ln());
    let derivative_margin = 2.0 * (n_f.ln() - ln_q1).max(0.0);
    ln_z_peak.max(0.0) + derivative_margin < OVERFLOW_GUARD_LN
}

/// Evaluates (n, q1) with the backend chosen by `policy`.
pub fn eval(n: u32, q1: Q1Value, policy: BackendPolicy) -> Result<ZEval> {
    match select_backend(n, q1, policy)? {
        BackendId::Matsubara => eval_matsubara(n, q1),
        BackendId::Landsberg => eval_landsberg(n, q1),
        BackendId::ParkKim => eval_park_kim(n, q1),
    }
}
