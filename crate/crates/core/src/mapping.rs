//! Harmonic mappings `f = h + conj(g)` with polynomial analytic parts.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::grid::{Boundary, DiskGrid};
use crate::series::ComplexSeries;

/// Slack allowed when a point is nominally on the unit circle.
const UNIT_DISK_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicMap {
    h: ComplexSeries,
    g: ComplexSeries,
    label: String,
}

/// Differential data of `f` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalData {
    pub value: Complex64,
    /// `f_z = h'(z)`
    pub fz: Complex64,
    /// `f_zbar = conj(g'(z))`
    pub fzbar: Complex64,
    /// `|f_z| + |f_zbar|`
    pub lambda_big: f64,
    /// `| |f_z| - |f_zbar| |`
    pub lambda_small: f64,
    pub jacobian: f64,
    /// `|g'/h'|`; `+inf` when only `h'` vanishes, `0` when both do.
    pub dilatation_mod: f64,
    /// Set when `h'(z) = g'(z) = 0`.
    pub degenerate: bool,
}

impl LocalData {
    pub fn is_sense_preserving(&self) -> bool {
        self.fzbar.norm() < self.fz.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SenseCheck {
    pub preserving: bool,
    pub witness: Option<Complex64>,
}

pub(crate) fn check_in_closed_disk(z: Complex64) -> Result<()> {
    if z.norm() > 1.0 + UNIT_DISK_SLACK || !z.norm().is_finite() {
        return Err(domain(format!("point {z} lies outside the closed unit disk")));
    }
    Ok(())
}

impl HarmonicMap {
    /// Pads `h` and `g` to a common degree.
    pub fn new(h: ComplexSeries, g: ComplexSeries, label: impl Into<String>) -> Self {
        let degree = h.degree().max(g.degree());
        Self {
            h: h.padded(degree),
            g: g.padded(degree),
            label: label.into(),
        }
    }

    /// Real-coefficient shorthand: `h = sum h[n] z^n`, `g = sum g[n] z^n`.
    pub fn from_real(h: &[f64], g: &[f64], label: impl Into<String>) -> Self {
        Self::new(ComplexSeries::from_real(h), ComplexSeries::from_real(g), label)
    }

    /// `f(z) = z`.
    pub fn identity() -> Self {
        Self::from_real(&[0.0, 1.0], &[0.0], "identity")
    }

    /// `f(z) = z + conj(z)^2 / 2`, the extremal map for the first coefficient bound.
    pub fn extremal() -> Self {
        Self::from_real(&[0.0, 1.0], &[0.0, 0.0, 0.5], "z + conj(z)^2/2")
    }

    pub fn h(&self) -> &ComplexSeries {
        &self.h
    }

    pub fn g(&self) -> &ComplexSeries {
        &self.g
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.h.degree()
    }

    /// `a_n`
    pub fn a(&self, n: usize) -> Complex64 {
        self.h.coeff(n)
    }

    /// `b_n`
    pub fn b(&self, n: usize) -> Complex64 {
        self.g.coeff(n)
    }

    /// `|a_n| + |b_n|`
    pub fn coeff_sum(&self, n: usize) -> f64 {
        self.a(n).norm() + self.b(n).norm()
    }

    /// Multiplies `f` by a positive real factor.
    pub fn scaled(&self, factor: f64) -> Self {
        let s = Complex64::new(factor, 0.0);
        Self {
            h: self.h.scaled(s),
            g: self.g.scaled(s),
            label: self.label.clone(),
        }
    }

    /// `z -> f(rho z)`.
    pub fn dilated(&self, rho: f64) -> Self {
        Self {
            h: self.h.dilated(rho),
            g: self.g.dilated(rho),
            label: self.label.clone(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `f(z) = h(z) + conj(g(z))` for `|z| <= 1`.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        check_in_closed_disk(z)?;
        Ok(self.value_at(z))
    }

    /// Unchecked evaluation; any `z` is accepted.
    pub fn value_at(&self, z: Complex64) -> Complex64 {
        self.h.eval(z) + self.g.eval(z).conj()
    }

    pub fn local_data(&self, z: Complex64) -> Result<LocalData> {
        check_in_closed_disk(z)?;
        Ok(self.local_at(z))
    }

    /// Unchecked version of [`HarmonicMap::local_data`].
    pub fn local_at(&self, z: Complex64) -> LocalData {
        let (hv, hd) = self.h.eval_with_derivative(z);
        let (gv, gd) = self.g.eval_with_derivative(z);
        let a = hd.norm();
        let b = gd.norm();
        let degenerate = a == 0.0 && b == 0.0;
        let dilatation_mod = if degenerate {
            0.0
        } else if a == 0.0 {
            f64::INFINITY
        } else {
            b / a
        };
        LocalData {
            value: hv + gv.conj(),
            fz: hd,
            fzbar: gd.conj(),
            lambda_big: a + b,
            lambda_small: (a - b).abs(),
            jacobian: (a - b) * (a + b),
            dilatation_mod,
            degenerate,
        }
    }

    /// `Lambda_f(z) = |h'(z)| + |g'(z)|`.
    pub fn lambda_big_at(&self, z: Complex64) -> f64 {
        self.h.eval_derivative(z).norm() + self.g.eval_derivative(z).norm()
    }

    /// Checks `|g'| < |h'|` on every point of the closed grid of radius `r`.
    pub fn sense_preserving_on(&self, r: f64, grid: &DiskGrid) -> Result<SenseCheck> {
        self.sense_preserving_with(r, grid, Boundary::Closed)
    }

    pub(crate) fn sense_preserving_with(
        &self,
        r: f64,
        grid: &DiskGrid,
        boundary: Boundary,
    ) -> Result<SenseCheck> {
        if !(r > 0.0 && r <= 1.0) {
            return Err(domain(format!("radius must lie in (0, 1], got {r}")));
        }
        let witness = grid.find_violation(r, boundary, |z| {
            self.g.eval_derivative(z).norm() < self.h.eval_derivative(z).norm()
        });
        Ok(SenseCheck {
            preserving: witness.is_none(),
            witness,
        })
    }
}
