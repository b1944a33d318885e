//! Direct summation over cycle types.
//!
//! Z_N = Σ_j (c_j/N!) Q₁^(l_j) where j runs over the P(N) cycle types, l_j
//! is the ring count of type j, and ln(c_j/N!) comes term by term from the
//! coefficient split in [`crate::combinatorics`]. The Q₁-derivative sums
//! just pick up l_j and l_j(l_j - 1) factors, so all three quantities
//! accumulate in one pass of streaming log-sum-exp.

use crate::combinatorics::{for_each_cycle_type_with_cap, DEFAULT_MATSUBARA_CAP};
use crate::error::{Error, Result};
use crate::numerics::{ln_factorial, LogSumExp};

use super::{BackendId, Q1Value, ZEval};

pub fn eval_matsubara(n: u32, q1: Q1Value) -> Result<ZEval> {
    eval_matsubara_with_cap(n, q1, DEFAULT_MATSUBARA_CAP)
}

/// [`eval_matsubara`] with an explicit cycle-type cap.
pub fn eval_matsubara_with_cap(n: u32, q1: Q1Value, cap: u32) -> Result<ZEval> {
    if n == 0 {
        return Err(Error::Domain("eval_matsubara needs n >= 1".into()));
    }
    if n > cap {
        return Err(Error::Capacity { n, cap });
    }
    let ln_q1 = q1.value().ln();
    // ln k for every part size and cardinality that can appear.
    let ln_table: Vec<f64> = (0..=n as usize)
        .map(|k| if k == 0 { 0.0 } else { (k as f64).ln() })
        .collect();

    let mut lse_z = LogSumExp::new();
    let mut lse_z1 = LogSumExp::new();
    let mut lse_z2 = LogSumExp::new();
    let mut bad_term: Option<(usize, f64)> = None;
    let mut term_index = 0usize;

    for_each_cycle_type_with_cap(n, cap, |parts| {
        let mut normalized_log = 0.0f64;
        let mut cardinality = 0u32;
        for &(k, g) in parts {
            normalized_log -= 2.5 * f64::from(g) * ln_table[k as usize] + ln_factorial(g);
            cardinality += g;
        }
        let l = f64::from(cardinality);
        let log_term = normalized_log + l * ln_q1;
        if !log_term.is_finite() && bad_term.is_none() {
            bad_term = Some((term_index, log_term));
        }
        lse_z.add(log_term);
        lse_z1.add(normalized_log + ln_table[cardinality as usize] + (l - 1.0) * ln_q1);
        if cardinality >= 2 {
            lse_z2.add(
                normalized_log
                    + ln_table[cardinality as usize]
                    + ln_table[cardinality as usize - 1]
                    + (l - 2.0) * ln_q1,
            );
        }
        term_index += 1;
    })?;

    if let Some((index, value)) = bad_term {
        return Err(Error::Numeric {
            context: format!("matsubara term {index} of n = {n}"),
            detail: format!("log term evaluated to {value}"),
        });
    }
    let log_z = lse_z.value();
    let ratio1 = (lse_z1.value() - log_z).exp();
    let ratio2 = if n == 1 {
        0.0
    } else {
        (lse_z2.value() - log_z).exp()
    };
    if !(log_z.is_finite() && ratio1.is_finite() && ratio2.is_finite()) {
        return Err(Error::Numeric {
            context: format!("matsubara totals for n = {n}, q1 = {}", q1.value()),
            detail: format!("log_z = {log_z}, ratio1 = {ratio1}, ratio2 = {ratio2}"),
        });
    }
    Ok(ZEval {
        n,
        q1,
        log_z,
        ratio1,
        ratio2,
        backend: BackendId::Matsubara,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rel_dev;

    fn q(v: f64) -> Q1Value {
        Q1Value::new(v).unwrap()
    }

    #[test]
    fn single_particle_is_exact() {
        let ev = eval_matsubara(1, q(7.3)).unwrap();
        assert!((ev.log_z - 7.3f64.ln()).abs() < 1e-15);
        assert!((ev.ratio1 - 1.0 / 7.3).abs() < 1e-16);
        assert_eq!(ev.ratio2, 0.0);
    }

    #[test]
    fn two_particles_match_hand_expansion() {
        // Z₂ = (Q₁² + 2^(-3/2) Q₁)/2, evaluated by hand at Q₁ = 1.
        let z2 = (1.0 + 2.0f64.powf(-1.5)) / 2.0;
        assert!((z2 - 0.676_776_695_296_636_9).abs() < 1e-15);
        let ev = eval_matsubara(2, q(1.0)).unwrap();
        assert!(rel_dev(ev.log_z, z2.ln()) < 1e-14);
        // Z₂′ = Q₁ + 2^(-5/2), Z₂″ = 1.
        let ratio1 = (1.0 + 2.0f64.powf(-2.5)) / z2;
        let ratio2 = 1.0 / z2;
        assert!(rel_dev(ev.ratio1, ratio1) < 1e-14);
        assert!(rel_dev(ev.ratio2, ratio2) < 1e-14);
    }

    #[test]
    fn four_particles_match_hand_expansion() {
        // Hand expansion at Q₁ = 2 of the four-particle closed form with
        // k^(-3/2) substitutions, divided by 4!.
        let q1 = 2.0f64;
        let a2 = 2.0f64.powf(-1.5);
        let a3 = 3.0f64.powf(-1.5);
        let a4 = 4.0f64.powf(-1.5);
        let q4 = q1.powi(4)
            + 6.0 * a2 * q1.powi(3)
            + (3.0 * a2 * a2 + 8.0 * a3) * q1.powi(2)
            + 6.0 * a4 * q1;
        let z4 = q4 / 24.0;
        let ev = eval_matsubara(4, q(2.0)).unwrap();
        assert!(rel_dev(ev.log_z, z4.ln()) < 1e-14);
    }

    #[test]
    fn rejects_zero_and_capped_n() {
        assert!(matches!(eval_matsubara(0, q(1.0)), Err(Error::Domain(_))));
        assert!(matches!(
            eval_matsubara(65, q(1.0)),
            Err(Error::Capacity { n: 65, cap: 64 })
        ));
        // Explicit cap admits it.
        assert!(eval_matsubara_with_cap(65, q(1.0), 65).is_ok());
    }

    #[test]
    fn extreme_q1_stays_finite() {
        // Log-sum-exp must carry q1 far beyond f64^ (1e300^40 term scale).
        let ev = eval_matsubara(40, q(1e300)).unwrap();
        assert!(ev.log_z.is_finite());
        assert!((ev.log_z - 40.0 * 1e300f64.ln() + ln_factorial(40)).abs() < 1e-6);
        let tiny = eval_matsubara(40, q(1e-300)).unwrap();
        assert!(tiny.log_z.is_finite());
        assert!(tiny.ratio1 > 0.0);
    }
}
