//! Golden-section minimization on the open unit interval.

use serde::Serialize;

use crate::error::{Error, Result};

const SEED_SAMPLES: usize = 1024;
const MAX_ITERATIONS: usize = 200;
const X_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Minimum {
    pub t: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Minimizes `objective` over `(0, 1)`.
///
/// The best of 1024 uniform samples seeds a golden-section search on the
/// bracket formed by its two neighbours. Fails if the seed value is not
/// finite or the bracket does not shrink below tolerance in 200 iterations.
pub fn minimize_unit_interval<F: Fn(f64) -> f64>(objective: F) -> Result<Minimum> {
    let step = 1.0 / SEED_SAMPLES as f64;
    let (best_i, best_v) = (0..SEED_SAMPLES)
        .map(|i| (i, objective((i as f64 + 0.5) * step)))
        .filter(|(_, v)| !v.is_nan())
        .fold((usize::MAX, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    if best_i == usize::MAX || !best_v.is_finite() {
        return Err(Error::Precondition(
            "objective is not finite anywhere on the seeding grid".into(),
        ));
    }

    let center = (best_i as f64 + 0.5) * step;
    let mut lo = (center - step).max(0.5 * step * 1e-3);
    let mut hi = (center + step).min(1.0 - 0.5 * step * 1e-3);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    let mut iterations = 0;
    while hi - lo > X_TOL {
        if iterations == MAX_ITERATIONS {
            return Err(Error::NoConvergence { iterations });
        }
        iterations += 1;
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        }
    }
    let (t, value) = [(x1, f1), (x2, f2), (center, best_v)]
        .into_iter()
        .fold((center, best_v), |acc, p| if p.1 < acc.1 { p } else { acc });
    Ok(Minimum { t, value, iterations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_objective() {
        let m = minimize_unit_interval(|t| 1.0 / (t * (1.0 - t))).unwrap();
        assert!((m.t - 0.5).abs() < 1e-6);
        assert!((m.value - 4.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_family() {
        for n in 2..=10 {
            let k = n - 1;
            let m = minimize_unit_interval(|t| 1.0 / (t.powi(k) * (1.0 - t))).unwrap();
            let exact = n as f64 * (1.0 + 1.0 / (n - 1) as f64).powi(k);
            assert!(((m.value - exact) / exact).abs() < 1e-9, "n={n}");
            assert!((m.t - (n - 1) as f64 / n as f64).abs() < 1e-5);
        }
    }

    #[test]
    fn non_finite_objective_fails() {
        assert!(minimize_unit_interval(|_| f64::NAN).is_err());
        assert!(minimize_unit_interval(|_| f64::INFINITY).is_err());
    }

    #[test]
    fn minimum_at_left_edge() {
        let m = minimize_unit_interval(|t| t).unwrap();
        assert!(m.value < 1e-3);
    }
}
