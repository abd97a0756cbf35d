//! Power-law majorants `omega(t) = scale * t^beta` and their regularity.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::quadrature::adaptive_simpson;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Majorant {
    pub scale: f64,
    pub beta: f64,
}

impl Majorant {
    pub fn new(scale: f64, beta: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(domain(format!("majorant scale must be positive, got {scale}")));
        }
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(domain(format!("majorant exponent must lie in (0, 1], got {beta}")));
        }
        Ok(Self { scale, beta })
    }

    /// `omega(t) = t`
    pub fn linear() -> Self {
        Self { scale: 1.0, beta: 1.0 }
    }

    pub fn power(beta: f64) -> Result<Self> {
        Self::new(1.0, beta)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.scale * t.powf(self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegularityReport {
    /// `int_0^delta omega(t)/t dt <= M omega(delta)`
    pub cond1: bool,
    /// `delta int_delta^inf omega(t)/t^2 dt <= M omega(delta)`
    pub cond2: bool,
    /// Smallest `M` that works for the first condition on the sampled deltas.
    pub m1: f64,
    /// Same for the second condition; infinite when its tail diverges.
    pub m2: f64,
    pub divergent_tail: bool,
    /// Relative growth of the truncated second integral when the truncation
    /// point moves from `delta e^20` to `delta e^40`.
    pub tail_growth: f64,
}

const LOG_SPAN: f64 = 40.0;
/// Keeps `e^x` well inside the finite range.
const LOG_CAP: f64 = 600.0;

/// Tests both regularity conditions on `n_samples` values of `delta` in
/// `(0, delta0)`.
///
/// Both integrals are computed in logarithmic variables. The first is
/// `int_0^inf omega(delta e^-x) dx`, truncated at `x = 40/beta` with the
/// remainder added in closed form. The second is
/// `int_0^inf omega(delta e^x) e^-x dx`; for `beta < 1` it is truncated at
/// `x = 40/(1 - beta)` with a closed-form remainder, and for `beta = 1` the
/// integrand is constant and the tail diverges. Truncation points are capped
/// at 600.
pub fn majorant_regularity_check(
    omega: &Majorant,
    delta0: f64,
    n_samples: usize,
) -> Result<RegularityReport> {
    if !(delta0 > 0.0 && delta0.is_finite()) {
        return Err(domain(format!("delta0 must be positive, got {delta0}")));
    }
    if n_samples == 0 {
        return Err(domain("need at least one sample"));
    }
    let beta = omega.beta;
    let divergent_tail = beta >= 1.0;

    let truncated_second = |delta: f64, x_max: f64| {
        adaptive_simpson(
            |x| omega.eval(delta * x.exp()) * (-x).exp(),
            0.0,
            x_max,
            1e-12 * omega.eval(delta),
        )
    };

    let mut m1: f64 = 0.0;
    let mut m2: f64 = 0.0;
    let mut tail_growth: f64 = 0.0;
    for k in 1..=n_samples {
        let delta = delta0 * k as f64 / (n_samples + 1) as f64;
        let w = omega.eval(delta);

        let x1 = (LOG_SPAN / beta).min(LOG_CAP);
        let head = adaptive_simpson(|x| omega.eval(delta * (-x).exp()), 0.0, x1, 1e-12 * w);
        let tail = omega.eval(delta * (-x1).exp()) / beta;
        m1 = m1.max((head + tail) / w);

        let short = truncated_second(delta, 20.0);
        let long = truncated_second(delta, 40.0);
        tail_growth = tail_growth.max((long - short) / short);
        if !divergent_tail {
            let x2 = (LOG_SPAN / (1.0 - beta)).min(LOG_CAP);
            let head = truncated_second(delta, x2);
            let tail = omega.eval(delta * x2.exp()) * (-x2).exp() / (1.0 - beta);
            m2 = m2.max((head + tail) / w);
        }
    }
    Ok(RegularityReport {
        cond1: m1.is_finite(),
        cond2: !divergent_tail && m2.is_finite(),
        m1,
        m2: if divergent_tail { f64::INFINITY } else { m2 },
        divergent_tail,
        tail_growth,
    })
}
