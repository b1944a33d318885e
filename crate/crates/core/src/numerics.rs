//! Small numerical building blocks: stable log-factorials, a streaming
//! log-sum-exp accumulator, and a derivative-free bracket maximizer.

use std::sync::OnceLock;

/// Largest n whose ln(n!) comes from the precomputed table; beyond this the
/// Stirling branch takes over (its truncation error is < 1e-20 there).
const LN_FACTORIAL_TABLE_LEN: usize = 4097;

/// ln(n!) without forming n! itself.
///
/// Table entries are accumulated with compensated summation, so each is
/// accurate to an ulp or two even near the top of the table.
pub fn ln_factorial(n: u32) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut entries = vec![0.0f64; LN_FACTORIAL_TABLE_LEN];
        let mut sum = 0.0f64;
        let mut compensation = 0.0f64;
        for (k, entry) in entries.iter_mut().enumerate().skip(1) {
            let term = (k as f64).ln() - compensation;
            let next = sum + term;
            compensation = (next - sum) - term;
            sum = next;
            *entry = sum;
        }
        entries
    });
    match table.get(n as usize) {
        Some(&value) => value,
        None => stirling_ln_gamma(n as f64 + 1.0),
    }
}

/// Stirling series for ln Γ(x), used only for arguments past the table.
fn stirling_ln_gamma(x: f64) -> f64 {
    const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv * (1.0 / 12.0 + inv2 * (-1.0 / 360.0 + inv2 * (1.0 / 1260.0)));
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + series
}

/// Streaming ln Σ exp(xᵢ): keeps a running maximum and a sum rescaled to it,
/// so arbitrarily large or small exponents never overflow.
#[derive(Clone, Copy, Debug)]
pub struct LogSumExp {
    max: f64,
    scaled_sum: f64,
}

impl LogSumExp {
    pub fn new() -> Self {
        Self {
            max: f64::NEG_INFINITY,
            scaled_sum: 0.0,
        }
    }

    /// Adds a term given as its logarithm. NEG_INFINITY terms (zero
    /// contributions) are skipped.
    pub fn add(&mut self, log_term: f64) {
        if log_term == f64::NEG_INFINITY {
            return;
        }
        if log_term <= self.max {
            self.scaled_sum += (log_term - self.max).exp();
        } else {
            self.scaled_sum = self.scaled_sum * (self.max - log_term).exp() + 1.0;
            self.max = log_term;
        }
    }

    /// ln of the accumulated sum; NEG_INFINITY if nothing was added.
    pub fn value(&self) -> f64 {
        if self.max == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            self.max + self.scaled_sum.ln()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.max == f64::NEG_INFINITY
    }
}

impl Default for LogSumExp {
    fn default() -> Self {
        Self::new()
    }
}

/// Golden-section search for the maximum of `f` on `[a, b]`.
///
/// Shrinks the bracket until its width drops below `tol` and returns the
/// better of the two interior probes as `(x_max, f_max)`. The caller is
/// responsible for supplying a bracket containing a single maximum.
pub fn golden_section_maximize<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// |a - b| scaled by the larger magnitude; 0 when both vanish.
pub fn rel_dev(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Relative deviation with the scale floored at 1, for quantities that are
/// themselves logarithms and may legitimately pass through zero.
pub fn rel_dev_log_scale(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}
