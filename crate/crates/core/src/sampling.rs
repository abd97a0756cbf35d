//! Deterministic point sampling and seeded families of test mappings.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::mapping::HarmonicMap;
use crate::series::ComplexSeries;

pub const DEFAULT_SEED: u64 = 42;

const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Seeded RNG used by every randomized routine in the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn radical_inverse(base: u64, mut i: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut x = 0.0;
    while i > 0 {
        x += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    x
}

/// Halton sequence with a seeded Cranley–Patterson rotation, so that different
/// seeds give different but equally well-spread point sets.
#[derive(Debug, Clone)]
pub struct QuasiRandom {
    shift: Vec<f64>,
    index: u64,
}

impl QuasiRandom {
    pub fn new(dims: usize, seed: u64) -> Self {
        assert!(dims >= 1 && dims <= PRIMES.len(), "1..=8 dimensions supported");
        let mut r = rng(seed);
        Self {
            shift: (0..dims).map(|_| r.gen::<f64>()).collect(),
            index: 0,
        }
    }

    pub fn next_into(&mut self, out: &mut [f64]) {
        self.index += 1;
        for (d, slot) in out.iter_mut().enumerate().take(self.shift.len()) {
            let x = radical_inverse(PRIMES[d], self.index) + self.shift[d];
            *slot = x - x.floor();
        }
    }
}

/// Area-uniform map from the unit square onto the disk of radius `radius`.
pub fn disk_point(radius: f64, u: f64, v: f64) -> Complex64 {
    Complex64::from_polar(radius * u.sqrt(), TAU * v)
}

/// `n` quasi-random points in `D_radius`.
pub fn disk_points(radius: f64, n: usize, seed: u64) -> Vec<Complex64> {
    let mut q = QuasiRandom::new(2, seed);
    let mut u = [0.0; 2];
    (0..n)
        .map(|_| {
            q.next_into(&mut u);
            disk_point(radius, u[0], u[1])
        })
        .collect()
}

/// `n` quasi-random pairs of points in `D_radius`.
pub fn disk_pairs(radius: f64, n: usize, seed: u64) -> Vec<(Complex64, Complex64)> {
    let mut q = QuasiRandom::new(4, seed);
    let mut u = [0.0; 4];
    (0..n)
        .map(|_| {
            q.next_into(&mut u);
            (disk_point(radius, u[0], u[1]), disk_point(radius, u[2], u[3]))
        })
        .collect()
}

fn random_complex<R: Rng>(rng: &mut R, max_modulus: f64) -> Complex64 {
    Complex64::from_polar(max_modulus * rng.gen::<f64>(), TAU * rng.gen::<f64>())
}

/// Random coefficients for indices `from..=degree`, rescaled so that
/// `sum n |c_n| = budget`.
fn weighted_coeffs<R: Rng>(rng: &mut R, from: usize, degree: usize, budget: f64) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); degree + 1];
    for (n, slot) in c.iter_mut().enumerate().skip(from) {
        // decay keeps high-order terms from dominating
        *slot = random_complex(rng, 1.0) / (n * n) as f64;
    }
    let weight: f64 = c.iter().enumerate().map(|(n, x)| n as f64 * x.norm()).sum();
    if weight > 0.0 {
        for x in c.iter_mut() {
            *x *= budget / weight;
        }
    }
    c
}

/// Random polynomial map in the normalized class: `h = alpha z + ...`,
/// `g = b_2 z^2 + ...`, sense-preserving on the closed unit disk.
///
/// Sense preservation follows from `|h'| >= alpha - sum n|a_n| > sum n|b_n| >= |g'|`.
pub fn normalized_map<R: Rng>(rng: &mut R, degree: usize, alpha: f64) -> HarmonicMap {
    let degree = degree.max(2);
    let a_budget = 0.45 * alpha * rng.gen::<f64>();
    let b_budget = 0.9 * (alpha - a_budget) * rng.gen::<f64>();
    let mut a = weighted_coeffs(rng, 2, degree, a_budget);
    a[1] = Complex64::new(alpha, 0.0);
    let b = weighted_coeffs(rng, 2, degree, b_budget);
    HarmonicMap::new(ComplexSeries::new(a), ComplexSeries::new(b), "random normalized")
}

/// Random polynomial map sense-preserving on the closed unit disk with no
/// normalization (constant terms and `b_1` may be nonzero).
pub fn sense_preserving_map<R: Rng>(rng: &mut R, degree: usize) -> HarmonicMap {
    let degree = degree.max(1);
    let a1 = random_complex(rng, 1.0) + Complex64::from_polar(0.5, TAU * rng.gen::<f64>());
    let a1 = if a1.norm() < 0.2 { a1 + 0.5 } else { a1 };
    let lead = a1.norm();
    let a_budget = 0.45 * lead * rng.gen::<f64>();
    let b_budget = 0.9 * (lead - a_budget) * rng.gen::<f64>();
    let mut a = weighted_coeffs(rng, 2, degree, a_budget);
    a[0] = random_complex(rng, 0.5);
    a[1] = a1;
    let mut b = weighted_coeffs(rng, 1, degree, b_budget);
    b[0] = random_complex(rng, 0.5);
    HarmonicMap::new(ComplexSeries::new(a), ComplexSeries::new(b), "random sense-preserving")
}

/// Random sense-preserving map with `sup |f| <= bound` on the closed unit disk.
pub fn self_map<R: Rng>(rng: &mut R, degree: usize, bound: f64) -> HarmonicMap {
    let f = sense_preserving_map(rng, degree);
    let l1: f64 = (0..=f.degree()).map(|n| f.coeff_sum(n)).sum();
    f.scaled(bound / l1).with_label("random self-map")
}

/// Random harmonic polynomial with no constraints at all.
pub fn arbitrary_map<R: Rng>(rng: &mut R, degree: usize) -> HarmonicMap {
    let a = (0..=degree).map(|_| random_complex(rng, 1.0)).collect();
    let b = (0..=degree).map(|_| random_complex(rng, 1.0)).collect();
    HarmonicMap::new(ComplexSeries::new(a), ComplexSeries::new(b), "random")
}
