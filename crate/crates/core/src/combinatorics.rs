//! Cycle types of the symmetric group and the exact coefficients of the
//! partition-function expansion built from them.
//!
//! A cycle type is an integer partition of N written as part sizes with
//! degeneracies: part k with degeneracy g(k) stands for g(k) composite rings
//! each of contour length kβ. The number of permutations with that cycle
//! type is N! / ∏ₖ k^g(k) g(k)!, an exact integer, and each merged ring of
//! length kβ carries a factor k^(-3/2) in three dimensions. Keeping the two
//! factors separate preserves exactness where the arithmetic is exact: the
//! integer count would overflow f64 at N = 171, while the half-power factor
//! is a benign real.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::ln_factorial;

/// Default cap on n for cycle-type enumeration. P(64) ≈ 1.74 million terms
/// keeps direct summation desk-scale; the recurrence backends take over for
/// larger n. Overridable through the `*_with_cap` entry points.
pub const DEFAULT_MATSUBARA_CAP: u32 = 64;

/// One cycle type: an integer partition of `n_total` stored as
/// `(part size, degeneracy)` pairs with strictly decreasing part sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    parts: Vec<(u32, u32)>,
    n_total: u32,
    cardinality: u32,
}

impl CycleType {
    /// Builds a cycle type from `(part, degeneracy)` pairs in strictly
    /// decreasing part order, validating the partition invariants.
    pub fn new(parts: Vec<(u32, u32)>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("cycle type must have at least one part".into()));
        }
        let mut n_total = 0u64;
        let mut cardinality = 0u64;
        for window in parts.windows(2) {
            if window[0].0 <= window[1].0 {
                return Err(Error::Domain(format!(
                    "cycle-type parts must be strictly decreasing, got {} then {}",
                    window[0].0, window[1].0
                )));
            }
        }
        for &(k, g) in &parts {
            if k == 0 || g == 0 {
                return Err(Error::Domain(
                    "cycle-type part sizes and degeneracies must be positive".into(),
                ));
            }
            n_total += u64::from(k) * u64::from(g);
            cardinality += u64::from(g);
        }
        let n_total = u32::try_from(n_total)
            .map_err(|_| Error::Domain("cycle-type total exceeds u32".into()))?;
        Ok(Self {
            parts,
            n_total,
            cardinality: cardinality as u32,
        })
    }

    /// Used by the enumerator, whose construction maintains the invariants.
    fn from_enumeration(parts: &[(u32, u32)], n_total: u32) -> Self {
        Self {
            parts: parts.to_vec(),
            n_total,
            cardinality: parts.iter().map(|&(_, g)| g).sum(),
        }
    }

    /// `(part size, degeneracy)` pairs, part sizes strictly decreasing.
    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// N = Σ k·g(k), the integer being partitioned.
    pub fn n_total(&self) -> u32 {
        self.n_total
    }

    /// l = Σ g(k), the number of rings after merging.
    pub fn cardinality(&self) -> u32 {
        self.cardinality
    }

    /// Degeneracy of one part size; 0 if the part is absent.
    pub fn degeneracy(&self, part: u32) -> u32 {
        self.parts
            .iter()
            .find(|&&(k, _)| k == part)
            .map_or(0, |&(_, g)| g)
    }
}

/// Exact expansion coefficient c for one cycle type, split into the integer
/// permutation count and the real half-power factor:
///
/// - `cycle_count`  = N! / ∏ₖ k^g(k) g(k)!          (exact integer)
/// - `half_power_factor` = ∏ₖ k^(-3·g(k)/2)          (positive real)
/// - `normalized_log` = ln(c / N!) = -Σₖ [ (5/2)·g(k)·ln k + ln g(k)! ]
///
/// `cycle_count · half_power_factor` is the full coefficient; the normalized
/// log is what enters Z_N = Σ (c/N!)·Q₁^l directly and is computed term by
/// term so N! never has to be formed.
#[derive(Clone, Debug)]
pub struct MatsubaraCoefficient {
    pub cycle_count: BigUint,
    pub half_power_factor: f64,
    pub normalized_log: f64,
}

/// Streams every cycle type of `n` to `visit`, in enumeration order, without
/// materializing the full list. The slice holds `(part, degeneracy)` pairs
/// with parts strictly decreasing.
///
/// The order matches writing each partition with parts descending and
/// sorting those tuples lexicographically: for n = 4 it is
/// {1:4}, {2:1,1:2}, {2:2}, {3:1,1:1}, {4:1}.
pub fn for_each_cycle_type<F>(n: u32, visit: F) -> Result<()>
where
    F: FnMut(&[(u32, u32)]),
{
    for_each_cycle_type_with_cap(n, DEFAULT_MATSUBARA_CAP, visit)
}

/// [`for_each_cycle_type`] with an explicit cap on n.
pub fn for_each_cycle_type_with_cap<F>(n: u32, cap: u32, mut visit: F) -> Result<()>
where
    F: FnMut(&[(u32, u32)]),
{
    if n == 0 || n > cap {
        return Err(Error::Domain(format!(
            "cycle-type enumeration needs 1 <= n <= {cap} (cap), got n = {n}"
        )));
    }
    let mut stack: Vec<(u32, u32)> = Vec::with_capacity(n as usize);
    descend(n, n, &mut stack, &mut visit);
    Ok(())
}

/// Emits partitions of `remaining` whose parts do not exceed `max_part`,
/// appended to `stack`. Looping the next (largest remaining) part upward
/// produces the canonical order.
fn descend<F>(remaining: u32, max_part: u32, stack: &mut Vec<(u32, u32)>, visit: &mut F)
where
    F: FnMut(&[(u32, u32)]),
{
    if remaining == 0 {
        visit(stack);
        return;
    }
    for k in 1..=remaining.min(max_part) {
        let merged = matches!(stack.last(), Some(&(part, _)) if part == k);
        if merged {
            stack.last_mut().unwrap().1 += 1;
        } else {
            stack.push((k, 1));
        }
        descend(remaining - k, k, stack, visit);
        if merged {
            stack.last_mut().unwrap().1 -= 1;
        } else {
            stack.pop();
        }
    }
}

/// All P(n) cycle types of `n` in the canonical deterministic order.
pub fn enumerate_cycle_types(n: u32) -> Result<Vec<CycleType>> {
    enumerate_cycle_types_with_cap(n, DEFAULT_MATSUBARA_CAP)
}

/// [`enumerate_cycle_types`] with an explicit cap on n.
pub fn enumerate_cycle_types_with_cap(n: u32, cap: u32) -> Result<Vec<CycleType>> {
    let mut out = Vec::new();
    for_each_cycle_type_with_cap(n, cap, |parts| {
        out.push(CycleType::from_enumeration(parts, n));
    })?;
    Ok(out)
}

/// Number of permutations of N objects with this cycle type:
/// N! / ∏ₖ k^g(k) g(k)!, computed exactly.
pub fn cycle_type_count(ct: &CycleType) -> BigUint {
    let numerator = big_factorial(ct.n_total());
    let mut denominator = BigUint::one();
    for &(k, g) in ct.parts() {
        denominator *= BigUint::from(k).pow(g);
        denominator *= big_factorial(g);
    }
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}

fn big_factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Exact coefficient data for one cycle type; see [`MatsubaraCoefficient`].
pub fn matsubara_coefficient(ct: &CycleType) -> MatsubaraCoefficient {
    let mut half_power_log = 0.0f64;
    let mut normalized_log = 0.0f64;
    for &(k, g) in ct.parts() {
        let ln_k = f64::from(k).ln();
        let g_f = f64::from(g);
        half_power_log -= 1.5 * g_f * ln_k;
        normalized_log -= 2.5 * g_f * ln_k + ln_factorial(g);
    }
    MatsubaraCoefficient {
        cycle_count: cycle_type_count(ct),
        half_power_factor: half_power_log.exp(),
        normalized_log,
    }
}

/// ln of a big integer, for consistency checks between the exact count and
/// the log-space coefficient. Uses the top 64 bits plus the bit offset.
pub fn ln_biguint(value: &BigUint) -> f64 {
    let bits = value.bits();
    if bits <= 53 {
        return value.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 53;
    let top = (value >> shift).to_f64().expect("53 bits fit in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
