//! Exact canonical-ensemble thermodynamics of the ideal Bose gas.
//!
//! A quantum particle at inverse temperature β is isomorphic to a classical
//! ring of contour length β; boson exchange lets N such rings merge into
//! longer composite rings. Summing over the merge patterns (the integer
//! partitions of N) gives the exact N-particle canonical partition function
//! Z_N as a polynomial in the single-ring partition function Q₁ = V/Λ³.
//!
//! The crate provides:
//!
//! - [`combinatorics`]: cycle-type enumeration and the exact expansion
//!   coefficients, split into a big-integer permutation count and a real
//!   half-power factor.
//! - [`backends`]: three independent evaluators for ln Z_N and the ratios
//!   Z′_N/Z_N, Z″_N/Z_N — direct partition summation, the O(N²) recurrence
//!   in plain floating point, and a ratio recursion that works entirely in
//!   log space and reaches N = 10⁵.
//! - [`thermo`]: specific heat per particle, λ-transition critical points,
//!   heat-capacity curves, SI unit conversions, and the configurational
//!   entropy of a perfect condensate.
//!
//! All computations are deterministic pure functions; curve sampling and
//! critical-point scans fan points out across threads without changing any
//! emitted value.

pub mod backends;
pub mod combinatorics;
pub mod error;
pub mod numerics;
pub mod thermo;

pub use backends::{
    eval, eval_landsberg, eval_matsubara, eval_park_kim, select_backend, BackendId, BackendPolicy,
    Q1Value, RatioRecursionState, ZEval,
};
pub use combinatorics::{
    cycle_type_count, enumerate_cycle_types, matsubara_coefficient, CycleType,
    MatsubaraCoefficient, DEFAULT_MATSUBARA_CAP,
};
pub use error::{Error, Result};
pub use thermo::{
    bec_condensate_entropy, critical_point, free_propagator, heat_curve, q1_from_physical,
    specific_heat, specific_heat_beta_oracle, thermal_wavelength, CondensateEntropy,
    CriticalPoint, GridSpec, HeatCurve, HeatSample, PhysicalParams, SearchConfig, SiConstants,
    Spacing,
};
