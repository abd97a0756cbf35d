//! Hyperbolic distance, the harmonic Bloch norm by two routes, the Poisson
//! kernel and extension, and the Garsia-type BMO norm of boundary traces.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::grid::{Boundary, DiskGrid};
use crate::majorant::Majorant;
use crate::mapping::HarmonicMap;
use crate::quadrature::adaptive_simpson;
use crate::sampling::QuasiRandom;

fn check_open_disk(z: Complex64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(domain(format!("point {z} is not in the open unit disk")));
    }
    Ok(())
}

/// `0.5 log((1 + x)/(1 - x))`, evaluated through `ln_1p` so that small
/// arguments keep full relative accuracy.
fn artanh(x: f64) -> f64 {
    0.5 * (x.ln_1p() - (-x).ln_1p())
}

/// Hyperbolic distance by the two closed forms: `artanh |(z - w)/(1 - conj(z) w)|`
/// and `0.5 log((|1 - conj(z) w| + |z - w|)/(|1 - conj(z) w| - |z - w|))`.
pub fn hyperbolic_distance_forms(z: Complex64, w: Complex64) -> Result<(f64, f64)> {
    check_open_disk(z)?;
    check_open_disk(w)?;
    let num = (z - w).norm();
    let den = (1.0 - z.conj() * w).norm();
    let pseudo = (num / den).min(1.0);
    let by_artanh = artanh(pseudo);
    let by_log = 0.5 * ((den + num) / (den - num)).ln();
    Ok((by_artanh, by_log))
}

pub fn hyperbolic_distance(z: Complex64, w: Complex64) -> Result<f64> {
    let (a, b) = hyperbolic_distance_forms(z, w)?;
    debug_assert!((a - b).abs() <= 1e-13 * (2.0 * a).exp().max(a), "{a} vs {b}");
    Ok(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochNorm {
    /// `|f(0)| + seminorm`
    pub value: f64,
    /// `sup (1 - |z|^2) Lambda_f(z)`
    pub seminorm: f64,
    pub at: Complex64,
}

/// Harmonic Bloch norm with the sup taken over the refined closed-disk grid.
pub fn bloch_norm(map: &HarmonicMap, grid: &DiskGrid) -> BlochNorm {
    let e = grid.sup(1.0, Boundary::Closed, |z| {
        Some((1.0 - z.norm_sqr()) * map.lambda_big_at(z))
    });
    let seminorm = e.value.max(0.0);
    BlochNorm {
        value: map.value_at(Complex64::new(0.0, 0.0)).norm() + seminorm,
        seminorm,
        at: e.at.unwrap_or_default(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ColonnaEstimate {
    /// Largest sampled `|f(z) - f(w)| / sigma(z, w)`.
    pub value: f64,
    pub z: Complex64,
    pub w: Complex64,
}

fn colonna_ratio(map: &HarmonicMap, z: Complex64, w: Complex64) -> Option<f64> {
    if z == w || z.norm() >= 1.0 || w.norm() >= 1.0 {
        return None;
    }
    let sigma = hyperbolic_distance(z, w).ok()?;
    (sigma > 0.0).then(|| (map.value_at(z) - map.value_at(w)).norm() / sigma)
}

const CLOSE_PAIR_SPAN: f64 = 1e-6;
const REFINE_STARTS: usize = 4;

/// Empirical `sup |f(z) - f(w)| / sigma(z, w)` over sampled pairs.
///
/// Half of the pairs are spread over the whole disk; the other half are
/// short chords (length `1e-6 (1 - |z|)`) whose direction is sampled too,
/// since the supremum is approached as `w -> z`. The four best pairs then
/// seed a compass search over chord midpoint and direction.
pub fn colonna_ratio_sup(map: &HarmonicMap, n_pairs: usize, seed: u64) -> ColonnaEstimate {
    let mut q = QuasiRandom::new(4, seed);
    let mut u = [0.0; 4];
    let mut best: Vec<(f64, Complex64, Complex64)> = Vec::new();
    let mut push = |r: f64, z: Complex64, w: Complex64| {
        if best.len() < REFINE_STARTS || r > best[best.len() - 1].0 {
            let at = best.partition_point(|b| b.0 >= r);
            best.insert(at, (r, z, w));
            best.truncate(REFINE_STARTS);
        }
    };
    for k in 0..n_pairs {
        q.next_into(&mut u);
        let z = crate::sampling::disk_point(1.0, u[0], u[1]);
        let w = if k % 2 == 0 {
            crate::sampling::disk_point(1.0, u[2], u[3])
        } else {
            z + Complex64::from_polar(CLOSE_PAIR_SPAN * (1.0 - z.norm()), TAU * u[2])
        };
        if let Some(r) = colonna_ratio(map, z, w) {
            push(r, z, w);
        }
    }
    let mut result = ColonnaEstimate {
        value: 0.0,
        z: Complex64::new(0.0, 0.0),
        w: Complex64::new(0.0, 0.0),
    };
    for &(r, z, w) in &best {
        if r > result.value {
            result = ColonnaEstimate { value: r, z, w };
        }
        let refined = refine_chord(map, 0.5 * (z + w), (z - w).arg());
        if refined.value > result.value {
            result = refined;
        }
    }
    result
}

fn chord(center: Complex64, angle: f64) -> (Complex64, Complex64) {
    let half = 0.5 * CLOSE_PAIR_SPAN * (1.0 - center.norm()).max(1e-6);
    let d = Complex64::from_polar(half, angle);
    (center + d, center - d)
}

fn refine_chord(map: &HarmonicMap, center: Complex64, angle: f64) -> ColonnaEstimate {
    let eval = |c: Complex64, a: f64| {
        if c.norm() >= 1.0 - 1e-9 {
            return None;
        }
        let (z, w) = chord(c, a);
        colonna_ratio(map, z, w)
    };
    let mut c = center;
    let mut a = angle;
    let mut value = eval(c, a).unwrap_or(0.0);
    let mut step = 0.05;
    let mut turn = 0.3;
    let moves = [(1.0, 0.0, 0.0), (-1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, -1.0, 0.0), (0.0, 0.0, 1.0), (0.0, 0.0, -1.0)];
    for _ in 0..5000 {
        if step < 1e-8 && turn < 1e-7 {
            break;
        }
        let mut improved = false;
        for (dx, dy, da) in moves {
            let c2 = c + Complex64::new(dx * step, dy * step);
            let a2 = a + da * turn;
            if let Some(v) = eval(c2, a2) {
                if v > value {
                    value = v;
                    c = c2;
                    a = a2;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
            turn *= 0.5;
        }
    }
    let (z, w) = chord(c, a);
    ColonnaEstimate { value, z, w }
}

/// `P(e^{i theta}, z) = (1 - |z|^2)/|e^{i theta} - z|^2`.
pub fn poisson_kernel(theta: f64, z: Complex64) -> Result<f64> {
    check_open_disk(z)?;
    Ok(kernel(theta, z))
}

fn kernel(theta: f64, z: Complex64) -> f64 {
    (1.0 - z.norm_sqr()) / (Complex64::from_polar(1.0, theta) - z).norm_sqr()
}

/// Samples `psi(theta)` at `n` uniform angles `theta_k = 2 pi k / n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryFunction {
    values: Vec<Complex64>,
    radius: Option<f64>,
    #[serde(skip)]
    nodes: Vec<Complex64>,
    #[serde(skip)]
    mean: Complex64,
}

impl BoundaryFunction {
    /// `values.len()` must be a power of two and at least 64.
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        let n = values.len();
        if n < 64 || !n.is_power_of_two() {
            return Err(domain(format!("need a power-of-two sample count >= 64, got {n}")));
        }
        let nodes = (0..n)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64))
            .collect();
        let mean = values.iter().sum::<Complex64>() / n as f64;
        Ok(Self {
            values,
            radius: None,
            nodes,
            mean,
        })
    }

    pub fn from_fn<F: Fn(f64) -> Complex64>(n: usize, psi: F) -> Result<Self> {
        Self::new((0..n).map(|k| psi(TAU * k as f64 / n as f64)).collect())
    }

    /// Trace `psi_r(theta) = f(r e^{i theta})`.
    pub fn from_map(map: &HarmonicMap, r: f64, n: usize) -> Result<Self> {
        if !(r > 0.0 && r < 1.0) {
            return Err(domain(format!("trace radius must lie in (0, 1), got {r}")));
        }
        let mut b = Self::from_fn(n, |t| map.value_at(Complex64::from_polar(r, t)))?;
        b.radius = Some(r);
        Ok(b)
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn radius(&self) -> Option<f64> {
        self.radius
    }

    /// Largest `|z|` at which the trapezoid rule still resolves the kernel:
    /// aliasing error behaves like `|z|^n`, so `1 - 32/n` keeps it near `e^-32`.
    pub fn resolvable_radius(&self) -> f64 {
        1.0 - 32.0 / self.values.len() as f64
    }

    /// Trapezoid sums `(1/n) sum P_k`, `(1/n) sum v_k P_k` and
    /// `(1/n) sum |v_k|^2 P_k` of the samples with their plain mean removed.
    fn moments(&self, z: Complex64) -> (f64, Complex64, f64) {
        let z2 = z.norm_sqr();
        let num = 1.0 - z2;
        let (mut s0, mut s1, mut s2) = (0.0, Complex64::new(0.0, 0.0), 0.0);
        for (&u, &v) in self.nodes.iter().zip(&self.values) {
            let p = num / (1.0 + z2 - 2.0 * (u.re * z.re + u.im * z.im));
            let v = v - self.mean;
            s0 += p;
            s1 += v * p;
            s2 += v.norm_sqr() * p;
        }
        let n = self.values.len() as f64;
        (s0 / n, s1 / n, s2 / n)
    }

    fn extension(&self, z: Complex64) -> Complex64 {
        let (s0, s1, _) = self.moments(z);
        s1 + self.mean * s0
    }

    /// `(1/2pi) int |psi - f_psi(z)|^2 P(e^{i theta}, z) d theta`
    fn garsia(&self, z: Complex64) -> f64 {
        let (s0, s1, s2) = self.moments(z);
        (s2 - 2.0 * s1.norm_sqr() + s1.norm_sqr() * s0).max(0.0)
    }
}

/// Trapezoid-rule Poisson integral of the samples.
pub fn poisson_extension(boundary: &BoundaryFunction, z: Complex64) -> Result<Complex64> {
    check_open_disk(z)?;
    Ok(boundary.extension(z))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BmoNorm {
    pub value: f64,
    pub at: Complex64,
}

/// `sup_z ((1/2pi) int |psi - f_psi(z)|^2 P d theta)^(1/2)`, with the sup
/// searched on the grid over `|z| <= resolvable_radius()`.
pub fn bmo_norm(boundary: &BoundaryFunction, grid: &DiskGrid) -> BmoNorm {
    let e = grid.sup(boundary.resolvable_radius(), Boundary::Closed, |z| {
        Some(boundary.garsia(z))
    });
    BmoNorm {
        value: e.value.max(0.0).sqrt(),
        at: e.at.unwrap_or_default(),
    }
}

/// `2 sqrt(omega(1)) M r sqrt(int_0^1 omega(1/(1 - r t)) dt)`.
pub fn bmo_bound_majorant(m: f64, r: f64, omega: &Majorant) -> Result<f64> {
    if !(m > 0.0) {
        return Err(domain(format!("M must be positive, got {m}")));
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(domain(format!("r must lie in (0, 1), got {r}")));
    }
    let integral = adaptive_simpson(|t| omega.eval(1.0 / (1.0 - r * t)), 0.0, 1.0, 1e-10);
    Ok(2.0 * omega.eval(1.0).sqrt() * m * r * integral.sqrt())
}

/// Smallest `M` with `Lambda_f(z) <= M omega(1/(1 - |z|))` on the grid.
pub fn majorant_constant(map: &HarmonicMap, omega: &Majorant, grid: &DiskGrid) -> f64 {
    grid.sup(1.0, Boundary::Open, |z| {
        Some(map.lambda_big_at(z) / omega.eval(1.0 / (1.0 - z.norm())))
    })
    .value
    .max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MajorantCheck {
    pub holds: bool,
    /// `max Lambda_f / (M omega(1/(1 - |z|)))` over the grid.
    pub worst_ratio: f64,
}

/// Checks `Lambda_f(z) <= M omega(1/(1 - |z|))` at every grid point of the
/// open disk (the right side is infinite on the circle).
pub fn gradient_majorant_check(
    map: &HarmonicMap,
    m: f64,
    omega: &Majorant,
    grid: &DiskGrid,
) -> MajorantCheck {
    let ratio = |z: Complex64| map.lambda_big_at(z) / (m * omega.eval(1.0 / (1.0 - z.norm())));
    let worst_ratio = grid
        .points(1.0, Boundary::Open)
        .into_iter()
        .map(ratio)
        .fold(0.0, f64::max);
    MajorantCheck {
        holds: worst_ratio <= 1.0 + 1e-12,
        worst_ratio,
    }
}
