//! Harmonic area function `S_f(r)` and class membership.
//!
//! Area is measured with `dA = dx dy / pi`, so the unit disk has mass one.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::grid::{map_points, Boundary, DiskGrid};
use crate::mapping::HarmonicMap;
use crate::quadrature::gauss_legendre_on;

/// Coefficients at or below this modulus count as zero in normalization checks.
pub const NORMALIZATION_TOL: f64 = 1e-14;

const QUADRATURE_RTOL: f64 = 1e-9;
const MAX_DOUBLINGS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassReport {
    pub in_h: bool,
    /// `h(0) = g(0) = g'(0) = 0`
    pub normalized: bool,
    /// `|g'| < |h'|` on the open unit disk grid
    pub sense_preserving: bool,
    pub alpha: f64,
    pub c: f64,
    /// `(1 + s)/(1 - s)` with `s = sup |g'/h'|` on the closed disk of radius `r_checked`.
    pub k_estimate: f64,
    pub dilatation_sup: f64,
    pub r_checked: f64,
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(domain(format!("radius must lie in [0, 1], got {r}")));
    }
    Ok(())
}

/// `S_f(r) = sum_{n>=1} n (|a_n|^2 - |b_n|^2) r^(2n)`.
pub fn area_series(map: &HarmonicMap, r: f64) -> Result<f64> {
    check_radius(r)?;
    let r2 = r * r;
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 1..=map.degree() {
        power *= r2;
        sum += n as f64 * (map.a(n).norm_sqr() - map.b(n).norm_sqr()) * power;
    }
    Ok(sum)
}

fn area_polar(map: &HarmonicMap, r: f64, n_radial: usize, n_angular: usize) -> f64 {
    let rule = gauss_legendre_on(n_radial, 0.0, r);
    let nodes: Vec<Complex64> = rule.iter().map(|&(rho, _)| Complex64::new(rho, 0.0)).collect();
    let rings = map_points(&nodes, &|rho: Complex64| {
        let rho = rho.re;
        let ring: f64 = (0..n_angular)
            .map(|j| {
                let z = Complex64::from_polar(rho, TAU * j as f64 / n_angular as f64);
                map.local_at(z).jacobian
            })
            .sum();
        Some(ring)
    });
    // (1/pi) * sum_i w_i rho_i * (2 pi / N) sum_j J
    rule.iter()
        .zip(rings)
        .map(|(&(rho, w), ring)| w * rho * ring.unwrap_or(0.0))
        .sum::<f64>()
        * 2.0
        / n_angular as f64
}

/// Polar quadrature of `J_f` over `D_r`: Gauss–Legendre in the radius,
/// trapezoid in the angle. The grid is doubled until two successive values
/// agree to `1e-9` relative, at most three times.
pub fn area_quadrature(map: &HarmonicMap, r: f64, grid: &DiskGrid) -> Result<f64> {
    check_radius(r)?;
    if r == 0.0 {
        return Ok(0.0);
    }
    let mut g = *grid;
    let mut value = area_polar(map, r, g.n_radial, g.n_angular);
    for _ in 0..MAX_DOUBLINGS {
        g = g.doubled();
        let next = area_polar(map, r, g.n_radial, g.n_angular);
        let converged = (next - value).abs() <= QUADRATURE_RTOL * next.abs().max(1.0);
        value = next;
        if converged {
            break;
        }
    }
    Ok(value)
}

/// Class constants on the full disk, using the default grid.
pub fn class_constants(map: &HarmonicMap) -> Result<ClassReport> {
    class_constants_on(map, 1.0, &DiskGrid::DEFAULT)
}

/// Class constants with area and dilatation restricted to `D_r`.
pub fn class_constants_on(map: &HarmonicMap, r: f64, grid: &DiskGrid) -> Result<ClassReport> {
    if map.degree() < 1 {
        return Err(domain("mapping must have degree at least 1"));
    }
    if !(r > 0.0 && r <= 1.0) {
        return Err(domain(format!("radius must lie in (0, 1], got {r}")));
    }
    let normalized = map.a(0).norm() <= NORMALIZATION_TOL
        && map.b(0).norm() <= NORMALIZATION_TOL
        && map.b(1).norm() <= NORMALIZATION_TOL;
    let sense_preserving = map.sense_preserving_with(1.0, grid, Boundary::Open)?.preserving;
    let dilatation_sup = grid
        .sup(r, Boundary::Closed, |z| {
            let d = map.local_at(z);
            (!d.degenerate).then_some(d.dilatation_mod)
        })
        .value
        .max(0.0);
    Ok(ClassReport {
        in_h: normalized && sense_preserving,
        normalized,
        sense_preserving,
        alpha: map.a(1).norm(),
        c: area_series(map, r)?,
        k_estimate: quasiregularity_constant(dilatation_sup),
        dilatation_sup,
        r_checked: r,
    })
}

/// `(1 + s)/(1 - s)`, infinite once `s >= 1`.
pub fn quasiregularity_constant(dilatation_sup: f64) -> f64 {
    if dilatation_sup >= 1.0 {
        f64::INFINITY
    } else {
        (1.0 + dilatation_sup) / (1.0 - dilatation_sup)
    }
}

/// Whether `S_f` is nondecreasing on `samples + 1` equally spaced radii in `[0, 1]`.
pub fn area_monotonicity_check(map: &HarmonicMap, samples: usize) -> Result<bool> {
    if samples == 0 {
        return Err(domain("samples must be positive"));
    }
    if !map
        .sense_preserving_with(1.0, &DiskGrid::FAST, Boundary::Open)?
        .preserving
    {
        return Err(Error::Precondition("mapping is not sense-preserving on the unit disk".into()));
    }
    let values = (0..=samples)
        .map(|k| area_series(map, k as f64 / samples as f64))
        .collect::<Result<Vec<_>>>()?;
    Ok(values
        .windows(2)
        .all(|w| w[1] >= w[0] - 1e-15 * w[0].abs().max(1.0)))
}
