//! Polar sampling of a disk `D_r`, with local refinement of sup/inf searches.
//!
//! Every sup/inf estimator in the crate goes through [`DiskGrid`]. Points are
//! the center plus `n_radial` rings of `n_angular` equally spaced angles. A
//! search then refines around the best point, halving the polar cell size
//! `refine_depth` times.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskGrid {
    pub n_radial: usize,
    pub n_angular: usize,
    pub refine_depth: usize,
}

/// Whether the outermost ring lies on `|z| = r` or strictly inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Closed,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub value: f64,
    /// `None` when every sampled point was skipped.
    pub at: Option<Complex64>,
    pub skipped: usize,
}

impl Default for DiskGrid {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl DiskGrid {
    pub const FAST: DiskGrid = DiskGrid {
        n_radial: 32,
        n_angular: 128,
        refine_depth: 4,
    };
    pub const DEFAULT: DiskGrid = DiskGrid {
        n_radial: 64,
        n_angular: 256,
        refine_depth: 4,
    };
    pub const PRECISE: DiskGrid = DiskGrid {
        n_radial: 128,
        n_angular: 1024,
        refine_depth: 6,
    };

    pub fn new(n_radial: usize, n_angular: usize, refine_depth: usize) -> Result<Self> {
        if n_radial < 8 {
            return Err(domain(format!("n_radial must be at least 8, got {n_radial}")));
        }
        if n_angular < 16 {
            return Err(domain(format!("n_angular must be at least 16, got {n_angular}")));
        }
        Ok(Self {
            n_radial,
            n_angular,
            refine_depth,
        })
    }

    /// Looks up a named preset: `fast`, `default` or `precise`.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "fast" => Some(Self::FAST),
            "default" => Some(Self::DEFAULT),
            "precise" => Some(Self::PRECISE),
            _ => None,
        }
    }

    /// Same grid with both resolutions doubled.
    pub fn doubled(&self) -> Self {
        Self {
            n_radial: self.n_radial * 2,
            n_angular: self.n_angular * 2,
            refine_depth: self.refine_depth,
        }
    }

    fn outer_ring(&self, boundary: Boundary) -> usize {
        match boundary {
            Boundary::Closed => self.n_radial,
            Boundary::Open => self.n_radial - 1,
        }
    }

    fn outer_radius(&self, radius: f64, boundary: Boundary) -> f64 {
        radius * self.outer_ring(boundary) as f64 / self.n_radial as f64
    }

    /// All grid points in a fixed order: the center first, then ring by ring.
    pub fn points(&self, radius: f64, boundary: Boundary) -> Vec<Complex64> {
        let rings = self.outer_ring(boundary);
        let mut pts = Vec::with_capacity(1 + rings * self.n_angular);
        pts.push(Complex64::new(0.0, 0.0));
        for k in 1..=rings {
            let rho = radius * k as f64 / self.n_radial as f64;
            for j in 0..self.n_angular {
                pts.push(Complex64::from_polar(rho, TAU * j as f64 / self.n_angular as f64));
            }
        }
        pts
    }

    /// Refined supremum of `f` over the grid. `f` returns `None` for points
    /// that should be skipped (degenerate or outside the function's domain).
    pub fn sup<F>(&self, radius: f64, boundary: Boundary, f: F) -> Extremum
    where
        F: Fn(Complex64) -> Option<f64> + Sync,
    {
        let pts = self.points(radius, boundary);
        let values = map_points(&pts, &f);
        let mut best = Extremum {
            value: f64::NEG_INFINITY,
            at: None,
            skipped: 0,
        };
        for (z, v) in pts.iter().zip(values) {
            match v.filter(|v| !v.is_nan()) {
                Some(v) if v > best.value || best.at.is_none() => {
                    best.value = v;
                    best.at = Some(*z);
                }
                Some(_) => {}
                None => best.skipped += 1,
            }
        }
        let Some(mut at) = best.at else {
            return best;
        };
        if best.value.is_infinite() {
            return best;
        }

        let rho_max = self.outer_radius(radius, boundary);
        let mut d_rho = radius / self.n_radial as f64;
        let mut d_theta = TAU / self.n_angular as f64;
        for _ in 0..self.refine_depth {
            d_rho *= 0.5;
            d_theta *= 0.5;
            let (rho0, theta0) = (at.norm(), at.arg());
            for i in -2i32..=2 {
                let rho = rho0 + i as f64 * d_rho;
                if rho < 0.0 || rho > rho_max {
                    continue;
                }
                for j in -2i32..=2 {
                    if i == 0 && j == 0 {
                        continue;
                    }
                    let z = Complex64::from_polar(rho, theta0 + j as f64 * d_theta);
                    if let Some(v) = f(z) {
                        if v > best.value && !v.is_nan() {
                            best.value = v;
                            at = z;
                        }
                    }
                }
            }
        }
        best.at = Some(at);
        best
    }

    /// Refined infimum; mirror image of [`DiskGrid::sup`].
    pub fn inf<F>(&self, radius: f64, boundary: Boundary, f: F) -> Extremum
    where
        F: Fn(Complex64) -> Option<f64> + Sync,
    {
        let e = self.sup(radius, boundary, |z| f(z).map(|v| -v));
        Extremum {
            value: -e.value,
            ..e
        }
    }

    /// First grid point (in [`DiskGrid::points`] order) where `pred` fails.
    pub fn find_violation<F>(&self, radius: f64, boundary: Boundary, pred: F) -> Option<Complex64>
    where
        F: Fn(Complex64) -> bool + Sync,
    {
        let pts = self.points(radius, boundary);
        let ok = map_points(&pts, &|z| Some(pred(z)));
        pts.into_iter()
            .zip(ok)
            .find(|(_, ok)| *ok == Some(false))
            .map(|(z, _)| z)
    }
}

#[cfg(feature = "parallel")]
pub(crate) fn map_points<T, F>(pts: &[Complex64], f: &F) -> Vec<Option<T>>
where
    T: Send,
    F: Fn(Complex64) -> Option<T> + Sync,
{
    use rayon::prelude::*;
    pts.par_iter().map(|&z| f(z)).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_points<T, F>(pts: &[Complex64], f: &F) -> Vec<Option<T>>
where
    F: Fn(Complex64) -> Option<T>,
{
    pts.iter().map(|&z| f(z)).collect()
}
