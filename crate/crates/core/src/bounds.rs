//! Coefficient bounds for the area classes and for quasiregular maps.

use std::f64::consts::{E, PI};

use serde::Serialize;

use crate::area::{class_constants, ClassReport};
use crate::error::{domain, Error, Result};
use crate::grid::{Boundary, DiskGrid};
use crate::mapping::HarmonicMap;
use crate::minimize::minimize_unit_interval;
use crate::series::ComplexSeries;

/// Relative slack used when comparing a coefficient against a bound.
pub const BOUND_TOL: f64 = 1e-12;

/// `r0 = (sqrt 5 - 1)/2`, the minimizer of `(1 + r)/(r^2 (1 - r))` on `(0, 1)`.
pub fn r0() -> f64 {
    (5f64.sqrt() - 1.0) / 2.0
}

/// `Q(r0) = sqrt((1 + r0) C / (r0^2 (1 - r0)))`.
pub fn q_constant(c: f64) -> f64 {
    let r = r0();
    ((1.0 + r) * c / (r * r * (1.0 - r))).sqrt()
}

/// `(1 + 1/(n-1))^(n-1)` for `n >= 2`.
fn growth_factor(n: usize) -> f64 {
    let k = (n - 1) as f64;
    (1.0 + 1.0 / k).powf(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundConstants {
    pub r0: f64,
    pub q: f64,
    pub e_const: f64,
    pub c: f64,
    pub k: f64,
    pub alpha: f64,
}

impl BoundConstants {
    pub fn new(c: f64, k: f64, alpha: f64) -> Self {
        Self {
            r0: r0(),
            q: q_constant(c),
            e_const: E,
            c,
            k,
            alpha,
        }
    }
}

fn check_c(c: f64) -> Result<()> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(domain(format!("C must be positive and finite, got {c}")));
    }
    Ok(())
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(domain(format!("coefficient index must be at least {min}, got {n}")));
    }
    Ok(())
}

/// Bound on `|a_1|` (n = 1) or `|a_n| + |b_n|` (n >= 2) for maps in `H(C)`.
pub fn bound_hc(c: f64, n: usize) -> Result<f64> {
    check_c(c)?;
    check_n(n, 1)?;
    if n == 1 {
        return Ok((2.0 * c).sqrt());
    }
    let r = r0();
    Ok(4.0 * q_constant(c) / (PI * r.powi(n as i32 - 1)) * growth_factor(n))
}

/// `4 Q(r0) e / (pi r0^(n-1))`, strictly above [`bound_hc`] for `n >= 2`.
pub fn bound_hc_envelope(c: f64, n: usize) -> Result<f64> {
    check_c(c)?;
    check_n(n, 2)?;
    Ok(4.0 * q_constant(c) * E / (PI * r0().powi(n as i32 - 1)))
}

/// Bound on `|a_n| + |b_n|` for `K`-quasiregular maps with area constant `C`.
pub fn bound_quasiregular(c: f64, k: f64, n: usize) -> Result<f64> {
    check_c(c)?;
    check_n(n, 1)?;
    if !(k >= 1.0 && k.is_finite()) {
        return Err(domain(format!("K must be finite and at least 1, got {k}")));
    }
    let base = (c * k).sqrt();
    if n == 1 {
        return Ok(base);
    }
    Ok(4.0 * base / PI * growth_factor(n))
}

/// Bound on `|a_n| + |b_n|` (n >= 2) for maps in `H_alpha(C)`:
/// `inf_t (Q^2 - alpha^2 (1-t)^2) / (t^(n-1) (1-t))`, scaled by `1/(n r0^(n-1) Q)`.
pub fn bound_h_alpha(c: f64, alpha: f64, n: usize) -> Result<f64> {
    check_c(c)?;
    check_n(n, 2)?;
    let q = q_constant(c);
    if !(alpha > 0.0 && alpha < q) {
        return Err(domain(format!("alpha must lie in (0, Q(r0)) = (0, {q}), got {alpha}")));
    }
    let k = n as i32 - 1;
    let m = minimize_unit_interval(|t| {
        let s = 1.0 - t;
        (q * q - alpha * alpha * s * s) / (t.powi(k) * s)
    })?;
    Ok(m.value / (n as f64 * r0().powi(k) * q))
}

/// `(Q(r0)/r0^(n-1)) (1 + 1/(n-1))^(n-1)`, strictly above [`bound_h_alpha`].
pub fn h_alpha_envelope(c: f64, n: usize) -> Result<f64> {
    check_c(c)?;
    check_n(n, 2)?;
    Ok(q_constant(c) / r0().powi(n as i32 - 1) * growth_factor(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub holds: bool,
    /// Index with the smallest margin; 0 stands for the constant term.
    pub worst_index: usize,
    pub worst_margin: f64,
    pub sup_modulus: f64,
}

/// For a harmonic map with `|f| <= M`: `|a_0| <= M` and `|a_n| + |b_n| <= 4M/pi`.
///
/// The constant term is `a_0 + conj(b_0)`. The hypothesis `sup |f| <= M` is
/// checked on the default grid of the closed disk.
pub fn bounded_coeff_lemma_check(map: &HarmonicMap, m: f64) -> Result<LemmaCheck> {
    if !(m > 0.0) {
        return Err(domain(format!("M must be positive, got {m}")));
    }
    let sup = DiskGrid::DEFAULT
        .sup(1.0, Boundary::Closed, |z| Some(map.value_at(z).norm()))
        .value;
    if sup > m * (1.0 + BOUND_TOL) {
        return Err(Error::Precondition(format!("sup |f| = {sup} exceeds M = {m}")));
    }
    let mut margins = vec![(0usize, m - (map.a(0) + map.b(0).conj()).norm())];
    let bound = 4.0 * m / PI;
    margins.extend((1..=map.degree()).map(|n| (n, bound - map.coeff_sum(n))));
    Ok(lemma_result(&margins, m, sup))
}

/// For analytic `psi` with `|psi| <= 1`: `|c_0|^2 + |c_n| <= 1` for every `n >= 1`.
pub fn schwarz_coeff_check(series: &ComplexSeries, grid: &DiskGrid) -> Result<LemmaCheck> {
    let sup = grid
        .sup(1.0, Boundary::Closed, |z| Some(series.eval(z).norm()))
        .value;
    if sup > 1.0 + BOUND_TOL {
        return Err(Error::Precondition(format!("sup |psi| = {sup} exceeds 1")));
    }
    let c0 = series.coeff(0).norm_sqr();
    let margins: Vec<_> = (1..=series.degree())
        .map(|n| (n, 1.0 - c0 - series.coeff(n).norm()))
        .collect();
    if margins.is_empty() {
        return Ok(LemmaCheck {
            holds: c0 <= 1.0 + BOUND_TOL,
            worst_index: 0,
            worst_margin: 1.0 - c0,
            sup_modulus: sup,
        });
    }
    Ok(lemma_result(&margins, 1.0, sup))
}

fn lemma_result(margins: &[(usize, f64)], scale: f64, sup: f64) -> LemmaCheck {
    let (worst_index, worst_margin) = margins
        .iter()
        .copied()
        .fold((0, f64::INFINITY), |acc, p| if p.1 < acc.1 { p } else { acc });
    LemmaCheck {
        holds: worst_margin >= -BOUND_TOL * scale,
        worst_index,
        worst_margin,
        sup_modulus: sup,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    /// `f` in `H(C)`
    AreaClass,
    /// `K`-quasiregular with finite area
    Quasiregular,
    /// `f` in `H_alpha(C)`
    FixedAlpha,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::AreaClass => "H(C)",
            BoundKind::Quasiregular => "quasiregular",
            BoundKind::FixedAlpha => "H_alpha(C)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub kind: BoundKind,
    pub actual: f64,
    pub bound: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub class: ClassReport,
    pub rows: Vec<BoundRow>,
    pub skipped: Vec<(BoundKind, String)>,
    pub violations: usize,
}

/// Compares every stored coefficient against each theorem whose hypotheses
/// the map satisfies, reporting the margin `bound - actual`.
pub fn verify_map_bounds(map: &HarmonicMap) -> Result<BoundsReport> {
    let class = class_constants(map)?;
    let quasi_ok = class.sense_preserving && class.k_estimate.is_finite();
    if !class.in_h && !quasi_ok {
        return Err(Error::Hypothesis(format!(
            "map is neither in H (normalized: {}, sense-preserving: {}) nor quasiregular (K = {})",
            class.normalized, class.sense_preserving, class.k_estimate
        )));
    }
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let c = class.c;
    let q = q_constant(c);

    if class.in_h {
        for n in 1..=map.degree() {
            let actual = if n == 1 { map.a(1).norm() } else { map.coeff_sum(n) };
            rows.push(row(n, BoundKind::AreaClass, actual, bound_hc(c, n)?));
        }
    } else {
        skipped.push((BoundKind::AreaClass, "map is not in H".to_string()));
    }

    if quasi_ok {
        for n in 1..=map.degree() {
            let bound = bound_quasiregular(c, class.k_estimate, n)?;
            rows.push(row(n, BoundKind::Quasiregular, map.coeff_sum(n), bound));
        }
    } else {
        skipped.push((
            BoundKind::Quasiregular,
            format!("dilatation reaches {} on the closed disk, K is infinite", class.dilatation_sup),
        ));
    }

    if !class.in_h {
        skipped.push((BoundKind::FixedAlpha, "map is not in H".to_string()));
    } else if !(class.alpha > 0.0 && class.alpha < q) {
        skipped.push((BoundKind::FixedAlpha, format!("alpha = {} is outside (0, Q(r0) = {q})", class.alpha)));
    } else if map.degree() < 2 {
        skipped.push((BoundKind::FixedAlpha, "no coefficients with n >= 2".to_string()));
    } else {
        for n in 2..=map.degree() {
            let bound = bound_h_alpha(c, class.alpha, n)?;
            rows.push(row(n, BoundKind::FixedAlpha, map.coeff_sum(n), bound));
        }
    }

    let violations = rows
        .iter()
        .filter(|r| r.margin < -BOUND_TOL * r.bound.max(1.0))
        .count();
    Ok(BoundsReport {
        class,
        rows,
        skipped,
        violations,
    })
}

fn row(n: usize, kind: BoundKind, actual: f64, bound: f64) -> BoundRow {
    BoundRow {
        n,
        kind,
        actual,
        bound,
        margin: bound - actual,
    }
}
