//! Landau-type univalence and covering radii, with sampled verification.
//!
//! For `f` in `H_alpha(C)` the univalence argument runs on the rescaled map
//! `F(z) = f(r0 z)/r0` over `D_rho`, so the disk on which `f` itself is
//! certified univalent is `D_{r0 rho}`; that is the disk checked here.

use std::f64::consts::{E, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::{q_constant, r0};
use crate::error::{domain, Result};
use crate::mapping::HarmonicMap;
use crate::sampling::disk_points;

/// Relative tolerance on `alpha = e Q rho (2 - rho)/(1 - rho)^2`.
pub const IDENTITY_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LandauRadii {
    pub c: f64,
    pub alpha: f64,
    pub r0: f64,
    pub q: f64,
    pub rho: f64,
    /// Radius of the disk on which `f` is univalent.
    pub r0_rho: f64,
    /// Radius of the disk covered by `f(D_{r0 rho})`.
    pub big_r0: f64,
    /// `|alpha - e Q rho (2 - rho)/(1 - rho)^2| / alpha`
    pub identity_residual: f64,
}

pub fn landau_radii(c: f64, alpha: f64) -> Result<LandauRadii> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(domain(format!("C must be positive and finite, got {c}")));
    }
    let q = q_constant(c);
    if !(alpha > 0.0 && alpha < q) {
        return Err(domain(format!("alpha must lie in (0, Q(r0)) = (0, {q}), got {alpha}")));
    }
    let eq = E * q;
    let x = alpha / eq;
    let s = (1.0 + x).sqrt();
    // rho = 1 - 1/s and rho/(1 - rho) = s - 1, written without cancellation
    let rho = x / (s * (s + 1.0));
    let rho_ratio = x / (s + 1.0);
    let r0 = r0();
    let big_r0 = r0 * rho * (alpha - eq * rho_ratio);
    let implied = eq * rho * (2.0 - rho) / ((1.0 - rho) * (1.0 - rho));
    let identity_residual = (alpha - implied).abs() / alpha;
    debug_assert!(identity_residual <= IDENTITY_RTOL, "residual {identity_residual}");
    Ok(LandauRadii {
        c,
        alpha,
        r0,
        q,
        rho,
        r0_rho: r0 * rho,
        big_r0,
        identity_residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum UnivalenceWitness {
    /// Two sample points with (numerically) equal images.
    Collision(Complex64, Complex64),
    /// A sample point with `J_f <= 0`.
    NotSensePreserving(Complex64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnivalenceOutcome {
    pub passed: bool,
    pub witness: Option<UnivalenceWitness>,
    pub min_separation: f64,
}

/// Pairwise collision test on quasi-random samples of `D_radius`.
///
/// This is a sampled surrogate, not a proof: it reports `false` if two images
/// coincide within `1e-10` times the image diameter, or if the Jacobian is
/// nonpositive at some sample. The pairs with the smallest difference
/// quotient are then polished by Newton's method to look for an exact
/// collision between the sample points.
pub fn univalence_check(
    map: &HarmonicMap,
    radius: f64,
    samples: usize,
    seed: u64,
) -> Result<UnivalenceOutcome> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(domain(format!("radius must lie in (0, 1), got {radius}")));
    }
    let pts = disk_points(radius, samples, seed);
    if let Some(&z) = pts.iter().find(|&&z| map.local_at(z).jacobian <= 0.0) {
        return Ok(UnivalenceOutcome {
            passed: false,
            witness: Some(UnivalenceWitness::NotSensePreserving(z)),
            min_separation: f64::NAN,
        });
    }
    let images: Vec<Complex64> = pts.iter().map(|&z| map.value_at(z)).collect();
    let (lo, hi) = images.iter().fold(
        (Complex64::new(f64::INFINITY, f64::INFINITY), Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), w| {
            (
                Complex64::new(lo.re.min(w.re), lo.im.min(w.im)),
                Complex64::new(hi.re.max(w.re), hi.im.max(w.im)),
            )
        },
    );
    let tol = 1e-10 * (hi - lo).norm();
    let mut min_separation = f64::INFINITY;
    // pairs with the smallest |f(z_i) - f(z_j)| / |z_i - z_j|, kept sorted
    let mut suspects: Vec<(f64, usize, usize)> = Vec::with_capacity(SUSPECTS + 1);
    for i in 0..images.len() {
        for j in (i + 1)..images.len() {
            let d = (images[i] - images[j]).norm();
            min_separation = min_separation.min(d);
            if d <= tol {
                return Ok(UnivalenceOutcome {
                    passed: false,
                    witness: Some(UnivalenceWitness::Collision(pts[i], pts[j])),
                    min_separation: d,
                });
            }
            let ratio = d / (pts[i] - pts[j]).norm();
            if suspects.len() < SUSPECTS || ratio < suspects[SUSPECTS - 1].0 {
                let at = suspects.partition_point(|s| s.0 <= ratio);
                suspects.insert(at, (ratio, i, j));
                suspects.truncate(SUSPECTS);
            }
        }
    }
    for &(_, i, j) in &suspects {
        if let Some(z2) = newton_preimage(map, images[i], pts[j], radius, tol) {
            if (z2 - pts[i]).norm() > 1e-6 * radius {
                return Ok(UnivalenceOutcome {
                    passed: false,
                    witness: Some(UnivalenceWitness::Collision(pts[i], z2)),
                    min_separation: 0.0,
                });
            }
        }
    }
    Ok(UnivalenceOutcome {
        passed: true,
        witness: None,
        min_separation,
    })
}

const SUSPECTS: usize = 8;

/// Newton iteration for `f(z) = target` from `start`, staying inside `D_radius`.
/// Uses the inverse of the real-linear differential,
/// `delta = (conj(f_z) r - f_zbar conj(r)) / J`.
fn newton_preimage(
    map: &HarmonicMap,
    target: Complex64,
    start: Complex64,
    radius: f64,
    tol: f64,
) -> Option<Complex64> {
    let mut z = start;
    for _ in 0..50 {
        let d = map.local_at(z);
        let r = target - d.value;
        if r.norm() <= tol {
            return Some(z);
        }
        if d.jacobian.abs() < 1e-300 {
            return None;
        }
        let delta = (d.fz.conj() * r - d.fzbar * r.conj()) / d.jacobian;
        z += delta;
        if z.norm() >= radius {
            return None;
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoveringOutcome {
    pub covered: bool,
    pub min_modulus: f64,
    /// Winding number of `f(|z| = disk_radius)` about 0; `None` if inconclusive.
    pub winding: Option<i64>,
    pub inconclusive: bool,
}

/// Checks `f(D_disk) ⊇ D_target` through the degree argument: the image of the
/// circle stays at distance `>= target` from 0 and winds once around it.
pub fn covering_check(
    map: &HarmonicMap,
    disk_radius: f64,
    target_radius: f64,
    n_boundary: usize,
) -> Result<CoveringOutcome> {
    if !(disk_radius > 0.0 && disk_radius < 1.0) {
        return Err(domain(format!("disk radius must lie in (0, 1), got {disk_radius}")));
    }
    if !(target_radius > 0.0) {
        return Err(domain(format!("target radius must be positive, got {target_radius}")));
    }
    if n_boundary < 3 {
        return Err(domain("need at least 3 boundary points"));
    }
    let images: Vec<Complex64> = (0..n_boundary)
        .map(|k| map.value_at(Complex64::from_polar(disk_radius, TAU * k as f64 / n_boundary as f64)))
        .collect();
    let min_modulus = images.iter().map(|w| w.norm()).fold(f64::INFINITY, f64::min);
    if min_modulus < 1e-12 {
        return Ok(CoveringOutcome {
            covered: false,
            min_modulus,
            winding: None,
            inconclusive: true,
        });
    }
    let winding = winding_number(&images, Complex64::new(0.0, 0.0));
    Ok(CoveringOutcome {
        covered: winding == 1 && min_modulus >= target_radius * (1.0 - 1e-12),
        min_modulus,
        winding: Some(winding),
        inconclusive: false,
    })
}

/// Winding number of a closed polygon about `center`, by summing the argument
/// increments of consecutive vertices.
pub fn winding_number(curve: &[Complex64], center: Complex64) -> i64 {
    let total: f64 = curve
        .iter()
        .zip(curve.iter().cycle().skip(1))
        .map(|(&a, &b)| ((b - center) / (a - center)).arg())
        .sum();
    (total / TAU).round() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::area::class_constants;
    use crate::sampling::{normalized_map, rng};
    use rand::Rng;

    #[test]
    fn radii_reference_values() {
        // 50-digit evaluation of the closed forms
        let r = landau_radii(1.0, 1.0).unwrap();
        assert!((r.rho - 0.05104202574328618).abs() < 1e-15);
        assert!((r.big_r0 - 0.0161859348332171).abs() < 1e-15);
        assert!((r.r0_rho - 0.031545706763997976).abs() < 1e-15);
        assert!(r.identity_residual <= IDENTITY_RTOL);
    }

    #[test]
    fn radii_vanish_with_alpha() {
        let r = landau_radii(1.0, 1e-9).unwrap();
        assert!(r.rho < 1e-9 && r.big_r0 < 1e-18 && r.big_r0 > 0.0);
    }

    #[test]
    fn radii_domain_errors() {
        let q = q_constant(1.0);
        assert!(landau_radii(1.0, q).is_err());
        assert!(landau_radii(1.0, 0.0).is_err());
        assert!(landau_radii(0.0, 0.1).is_err());
    }

    #[test]
    fn lattice_properties() {
        for i in 1..=20 {
            let c = 0.1 * i as f64;
            let q = q_constant(c);
            let mut prev: Option<LandauRadii> = None;
            for j in 1..=20 {
                let alpha = q * j as f64 / 21.0;
                let r = landau_radii(c, alpha).unwrap();
                assert!(r.rho > 0.0 && r.rho < 1.0);
                assert!(r.big_r0 > 0.0 && r.big_r0 < r.r0_rho * alpha);
                assert!(r.identity_residual <= IDENTITY_RTOL);
                // rho/(1 - rho) = sqrt(1 + alpha/(eQ)) - 1
                let s = (1.0 + alpha / (E * q)).sqrt();
                assert!((r.rho / (1.0 - r.rho) - (s - 1.0)).abs() < 1e-14);
                if let Some(p) = prev {
                    assert!(r.rho > p.rho && r.big_r0 > p.big_r0);
                }
                prev = Some(r);
            }
        }
    }

    #[test]
    fn univalence_examples() {
        assert!(univalence_check(&HarmonicMap::identity(), 0.9, 500, 42).unwrap().passed);
        let r = landau_radii(0.5, 1.0).unwrap();
        assert!(univalence_check(&HarmonicMap::extremal(), r.r0_rho, 500, 42).unwrap().passed);
        let reversing = HarmonicMap::from_real(&[0.0, 0.0, 1.0], &[0.0, 1.0], "");
        let out = univalence_check(&reversing, 0.5, 200, 42).unwrap();
        assert!(!out.passed);
        assert!(matches!(out.witness, Some(UnivalenceWitness::NotSensePreserving(_))));
        assert!(univalence_check(&HarmonicMap::identity(), 1.0, 10, 42).is_err());
    }

    #[test]
    fn collision_is_detected() {
        // z^2 identifies z and -z
        let f = HarmonicMap::from_real(&[0.0, 0.0, 1.0], &[0.0], "z^2");
        let out = univalence_check(&f, 0.5, 300, 1).unwrap();
        assert!(!out.passed);
    }

    #[test]
    fn covering_examples() {
        let id = HarmonicMap::identity();
        let ok = covering_check(&id, 0.5, 0.5, 4096).unwrap();
        assert!(ok.covered);
        assert_eq!(ok.winding, Some(1));
        assert!(!covering_check(&id, 0.5, 0.6, 4096).unwrap().covered);

        let r = landau_radii(0.5, 1.0).unwrap();
        let out = covering_check(&HarmonicMap::extremal(), r.r0_rho, r.big_r0, 4096).unwrap();
        assert!(out.covered && out.min_modulus >= r.big_r0);

        // image circle through the origin
        let shifted = HarmonicMap::from_real(&[-0.5, 1.0], &[0.0], "");
        assert!(covering_check(&shifted, 0.5, 0.1, 4096).unwrap().inconclusive);
    }

    #[test]
    fn winding_of_double_circle() {
        let pts: Vec<_> = (0..64).map(|k| Complex64::from_polar(1.0, 2.0 * TAU * k as f64 / 64.0)).collect();
        assert_eq!(winding_number(&pts, Complex64::new(0.0, 0.0)), 2);
        assert_eq!(winding_number(&pts, Complex64::new(3.0, 0.0)), 0);
    }

    #[test]
    fn random_class_maps_pass_both_checks() {
        let mut r = rng(2024);
        for _ in 0..25 {
            let alpha = 0.3 + 1.5 * r.gen::<f64>();
            let f = normalized_map(&mut r, 6, alpha);
            let class = class_constants(&f).unwrap();
            let radii = landau_radii(class.c, class.alpha).unwrap();
            assert!(univalence_check(&f, radii.r0_rho, 300, 7).unwrap().passed);
            assert!(covering_check(&f, radii.r0_rho, radii.big_r0, 1024).unwrap().covered);
        }
    }
}
