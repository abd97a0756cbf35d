//! Lipschitz-type constants on `D_r`, the interior gradient chain, a
//! Schwarz-Pick check for quasiregular self-maps, full convexity of circle
//! images, and the analytic-part sandwich inequality.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::area::NORMALIZATION_TOL;
use crate::error::{domain, Error, Result};
use crate::grid::{Boundary, DiskGrid};
use crate::landau::winding_number;
use crate::majorant::{majorant_regularity_check, Majorant};
use crate::mapping::HarmonicMap;
use crate::quadrature::gauss_legendre_on;
use crate::sampling::{disk_pairs, disk_point, QuasiRandom};

const MIN_SEPARATION: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LipschitzVariant {
    /// `|f(z) - f(w)|` with `z, w` in `D_r`
    FullDisk,
    /// `||f(z)| - |f(w)||` with `z, w` in `D_r`
    Modulus,
    /// `||f(z)| - |f(w)||` with `z` in `D_r` and `|w| = r`
    ModulusToBoundary,
}

impl LipschitzVariant {
    pub const ALL: [LipschitzVariant; 3] = [
        LipschitzVariant::FullDisk,
        LipschitzVariant::Modulus,
        LipschitzVariant::ModulusToBoundary,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LipschitzVariant::FullDisk => "full-disk",
            LipschitzVariant::Modulus => "modulus",
            LipschitzVariant::ModulusToBoundary => "modulus-to-boundary",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LipschitzEstimate {
    /// Largest sampled ratio; a lower bound for the true constant.
    pub constant: f64,
    pub variant: LipschitzVariant,
    pub r: f64,
    pub n_pairs: usize,
    pub witness: Option<(Complex64, Complex64)>,
}

type Pair = (Complex64, Complex64);

/// `n` interior pairs followed by `n` pairs with the second point on `|w| = r`.
///
/// The full and modulus variants use all of them and the boundary variant
/// only the second half, so the three estimates are always ordered.
fn sample_pairs(r: f64, n: usize, seed: u64) -> (Vec<Pair>, Vec<Pair>) {
    let interior = disk_pairs(r, n, seed);
    let mut q = QuasiRandom::new(3, seed ^ 0x5bd1_e995);
    let mut u = [0.0; 3];
    let boundary = (0..n)
        .map(|_| {
            q.next_into(&mut u);
            (disk_point(r, u[0], u[1]), Complex64::from_polar(r, TAU * u[2]))
        })
        .collect();
    (interior, boundary)
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain(format!("radius must lie in (0, 1), got {r}")));
    }
    Ok(())
}

/// Empirical `M` in `|F(z) - F(w)| <= M omega(|z - w|)` over sampled pairs,
/// where `F` is `f` or `|f|` depending on the variant. Pairs closer than
/// `1e-12` are skipped.
pub fn lipschitz_estimate(
    map: &HarmonicMap,
    omega: &Majorant,
    r: f64,
    variant: LipschitzVariant,
    n_pairs: usize,
    seed: u64,
) -> Result<LipschitzEstimate> {
    check_radius(r)?;
    let (interior, boundary) = sample_pairs(r, n_pairs, seed);
    let pairs: Vec<_> = match variant {
        LipschitzVariant::ModulusToBoundary => boundary,
        _ => interior.into_iter().chain(boundary).collect(),
    };
    let mut best = (0.0, None);
    for &(z, w) in &pairs {
        let sep = (z - w).norm();
        if sep < MIN_SEPARATION {
            continue;
        }
        let (fz, fw) = (map.value_at(z), map.value_at(w));
        let diff = match variant {
            LipschitzVariant::FullDisk => (fz - fw).norm(),
            _ => (fz.norm() - fw.norm()).abs(),
        };
        let ratio = diff / omega.eval(sep);
        if ratio > best.0 {
            best = (ratio, Some((z, w)));
        }
    }
    Ok(LipschitzEstimate {
        constant: best.0,
        variant,
        r,
        n_pairs: pairs.len(),
        witness: best.1,
    })
}

/// `(1 + r)/(1 - r)`, the dilatation bound on `D_r` when `f_zbar(0) = 0`.
pub fn k_of_r(r: f64) -> f64 {
    (1.0 + r) / (1.0 - r)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub r: f64,
    pub estimates: [LipschitzEstimate; 3],
    /// The modulus-to-boundary constant.
    pub m3: f64,
    pub k_r: f64,
    /// Largest `Lambda_f(z) d(z) / (6 M3 K(r) omega(d(z)))`, `d(z) = r - |z|`.
    pub worst_chain_ratio: f64,
    pub worst_at: Complex64,
    pub chain_holds: bool,
    /// Largest `int_[z,w] Lambda_f ds / omega(|z - w|)` over sampled pairs
    /// together with the full-disk witness pair.
    pub implied_constant: f64,
}

const EQUIVALENCE_PAIRS: usize = 4000;
const SEGMENT_PAIRS: usize = 500;

/// Runs the three Lipschitz estimates and checks the gradient chain
/// `Lambda_f(z) <= 6 M3 K(r) omega(d(z))/d(z)` on the open grid of `D_r`.
///
/// Hypotheses: `f_zbar(0) = 0`, `f` sense-preserving on the closed grid of
/// `D_r`, and `omega` satisfying the first regularity condition.
pub fn equivalence_witness(
    map: &HarmonicMap,
    omega: &Majorant,
    r: f64,
    grid: &DiskGrid,
    seed: u64,
) -> Result<EquivalenceReport> {
    check_radius(r)?;
    if map.b(1).norm() > NORMALIZATION_TOL {
        return Err(Error::Hypothesis(format!(
            "f_zbar(0) = {} is not zero",
            map.b(1).conj()
        )));
    }
    let sense = map.sense_preserving_on(r, grid)?;
    if let Some(z) = sense.witness {
        return Err(Error::Hypothesis(format!("mapping is not sense-preserving at {z}")));
    }
    if !majorant_regularity_check(omega, r, 16)?.cond1 {
        return Err(Error::Hypothesis("majorant fails the first regularity condition".into()));
    }

    let est = |v| lipschitz_estimate(map, omega, r, v, EQUIVALENCE_PAIRS, seed);
    let estimates = [
        est(LipschitzVariant::FullDisk)?,
        est(LipschitzVariant::Modulus)?,
        est(LipschitzVariant::ModulusToBoundary)?,
    ];
    let m3 = estimates[2].constant;
    let k_r = k_of_r(r);

    let mut worst = (0.0f64, Complex64::new(0.0, 0.0));
    for z in grid.points(r, Boundary::Open) {
        let d = r - z.norm();
        let lhs = map.lambda_big_at(z) * d;
        let rhs = 6.0 * m3 * k_r * omega.eval(d);
        let ratio = if rhs > 0.0 {
            lhs / rhs
        } else if lhs > 0.0 {
            f64::INFINITY
        } else {
            0.0
        };
        if ratio > worst.0 {
            worst = (ratio, z);
        }
    }

    let nodes = gauss_legendre_on(16, 0.0, 1.0);
    let implied_constant = disk_pairs(r, SEGMENT_PAIRS, seed)
        .into_iter()
        .chain(estimates[0].witness)
        .filter(|(z, w)| (z - w).norm() >= MIN_SEPARATION)
        .map(|(z, w)| {
            let len = (w - z).norm();
            let integral: f64 = nodes
                .iter()
                .map(|&(t, wt)| wt * map.lambda_big_at(z + (w - z) * t))
                .sum::<f64>()
                * len;
            integral / omega.eval(len)
        })
        .fold(0.0, f64::max);

    Ok(EquivalenceReport {
        r,
        estimates,
        m3,
        k_r,
        worst_chain_ratio: worst.0,
        worst_at: worst.1,
        chain_holds: worst.0 <= 1.0,
        implied_constant,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchwarzPickCheck {
    pub holds: bool,
    /// Largest `Lambda_f (1 - |z|^2) / (K (1 - |f|^2))` on the grid.
    pub max_ratio: f64,
    pub at: Complex64,
}

/// Checks `Lambda_f(z) <= K (1 - |f(z)|^2)/(1 - |z|^2)` on the open grid.
///
/// Preconditions, checked on the same points: `|f| < 1` and
/// `Lambda_f / lambda_f <= K`.
pub fn schwarz_pick_check(map: &HarmonicMap, k: f64, grid: &DiskGrid) -> Result<SchwarzPickCheck> {
    if !(k >= 1.0) {
        return Err(domain(format!("K must be at least 1, got {k}")));
    }
    let mut best = (f64::NEG_INFINITY, Complex64::new(0.0, 0.0));
    for z in grid.points(1.0, Boundary::Open) {
        let d = map.local_at(z);
        let fz2 = d.value.norm_sqr();
        if fz2 >= 1.0 {
            return Err(Error::Precondition(format!("|f| >= 1 at {z}")));
        }
        if d.lambda_big > k * d.lambda_small * (1.0 + 1e-12) {
            return Err(Error::Precondition(format!(
                "Lambda/lambda exceeds K = {k} at {z}"
            )));
        }
        let ratio = d.lambda_big * (1.0 - z.norm_sqr()) / (k * (1.0 - fz2));
        if ratio > best.0 {
            best = (ratio, z);
        }
    }
    Ok(SchwarzPickCheck {
        holds: best.0 <= 1.0 + 1e-12,
        max_ratio: best.0,
        at: best.1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusConvexity {
    pub r: f64,
    pub convex: bool,
    pub inconclusive: bool,
    /// Share of turning cross products within the flat tolerance.
    pub flat_fraction: f64,
    /// Winding of the image curve about its centroid.
    pub winding: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexityReport {
    pub convex: bool,
    pub inconclusive: bool,
    pub first_failure: Option<f64>,
    pub radii: Vec<RadiusConvexity>,
}

/// Turning test on a closed polygon: all non-flat cross products of
/// consecutive edges share one sign, and the winding about the centroid is
/// one in that orientation.
pub fn convex_polygon(curve: &[Complex64]) -> RadiusConvexity {
    let n = curve.len();
    let (mut lo, mut hi) = (curve[0], curve[0]);
    for p in curve {
        lo = Complex64::new(lo.re.min(p.re), lo.im.min(p.im));
        hi = Complex64::new(hi.re.max(p.re), hi.im.max(p.im));
    }
    let scale = (hi - lo).norm();
    let flat_tol = 1e-12 * scale * scale;
    let (mut pos, mut neg, mut flat) = (0usize, 0usize, 0usize);
    for k in 0..n {
        let e1 = curve[(k + 1) % n] - curve[k];
        let e2 = curve[(k + 2) % n] - curve[(k + 1) % n];
        let cross = e1.re * e2.im - e1.im * e2.re;
        if cross.abs() <= flat_tol {
            flat += 1;
        } else if cross > 0.0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    let centroid = curve.iter().sum::<Complex64>() / n as f64;
    let winding = if scale > 0.0 { winding_number(curve, centroid) } else { 0 };
    let flat_fraction = flat as f64 / n as f64;
    let turning_ok = (neg == 0 && winding == 1) || (pos == 0 && winding == -1);
    RadiusConvexity {
        r: f64::NAN,
        convex: scale > 0.0 && turning_ok,
        inconclusive: flat_fraction > 0.01,
        flat_fraction,
        winding,
    }
}

/// Samples `f(r e^{i theta})` at `n_boundary` angles for each radius and
/// tests convexity of the image polygon.
pub fn fully_convex_check(map: &HarmonicMap, radii: &[f64], n_boundary: usize) -> Result<ConvexityReport> {
    if n_boundary < 64 {
        return Err(domain(format!("need at least 64 boundary points, got {n_boundary}")));
    }
    if radii.is_empty() {
        return Err(domain("no radii given"));
    }
    let mut out = Vec::with_capacity(radii.len());
    for &r in radii {
        check_radius(r)?;
        let curve: Vec<_> = (0..n_boundary)
            .map(|k| map.value_at(Complex64::from_polar(r, TAU * k as f64 / n_boundary as f64)))
            .collect();
        out.push(RadiusConvexity { r, ..convex_polygon(&curve) });
    }
    Ok(ConvexityReport {
        convex: out.iter().all(|c| c.convex),
        inconclusive: out.iter().any(|c| c.inconclusive),
        first_failure: out.iter().find(|c| !c.convex).map(|c| c.r),
        radii: out,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SandwichReport {
    pub holds: bool,
    /// Smallest `(1 + r)|h(z2) - h(z1)| / |f(z2) - f(z1)| - 1`.
    pub lower_margin: f64,
    /// Smallest `|f(z2) - f(z1)| / ((1 - r)|h(z2) - h(z1)|) - 1`.
    pub upper_margin: f64,
    pub violations: usize,
    pub h_collisions: usize,
    pub pairs: usize,
}

pub const SANDWICH_LADDER: usize = 8;
pub const SANDWICH_BOUNDARY: usize = 4096;

/// Checks `|f(z2) - f(z1)|/(1 + r) <= |h(z2) - h(z1)| <= |f(z2) - f(z1)|/(1 - r)`
/// on sampled pairs of `D_r`.
///
/// The map must be in the normalized class and pass [`fully_convex_check`]
/// on the radii `k r / 8`, `k = 1..=8`.
pub fn sandwich_check(map: &HarmonicMap, r: f64, n_pairs: usize, seed: u64) -> Result<SandwichReport> {
    check_radius(r)?;
    let class = crate::area::class_constants_on(map, 1.0, &DiskGrid::FAST)?;
    if !class.in_h {
        return Err(Error::Hypothesis("mapping is not in the normalized sense-preserving class".into()));
    }
    let ladder: Vec<f64> = (1..=SANDWICH_LADDER)
        .map(|k| r * k as f64 / SANDWICH_LADDER as f64)
        .collect();
    let convexity = fully_convex_check(map, &ladder, SANDWICH_BOUNDARY)?;
    if let Some(bad) = convexity.first_failure {
        return Err(Error::Hypothesis(format!("image of |z| = {bad} is not convex")));
    }

    let mut report = SandwichReport {
        holds: true,
        lower_margin: f64::INFINITY,
        upper_margin: f64::INFINITY,
        violations: 0,
        h_collisions: 0,
        pairs: 0,
    };
    for (z1, z2) in disk_pairs(r, n_pairs, seed) {
        if (z1 - z2).norm() < MIN_SEPARATION {
            continue;
        }
        report.pairs += 1;
        let df = (map.value_at(z2) - map.value_at(z1)).norm();
        let dh = (map.h().eval(z2) - map.h().eval(z1)).norm();
        if dh <= 1e-14 * (z1 - z2).norm() {
            report.h_collisions += 1;
        }
        let lower = (1.0 + r) * dh / df - 1.0;
        let upper = df / ((1.0 - r) * dh) - 1.0;
        if lower < -1e-12 || upper < -1e-12 {
            report.violations += 1;
        }
        report.lower_margin = report.lower_margin.min(lower);
        report.upper_margin = report.upper_margin.min(upper);
    }
    report.holds = report.violations == 0 && report.h_collisions == 0;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InverseDerivativeCheck {
    pub holds: bool,
    pub max_residual: f64,
    pub checked: usize,
    pub skipped: usize,
}

pub const INVERSE_RESIDUAL_TOL: f64 = 1e-10;

/// Composes `Df` with the candidate inverse differential
/// `(conj(h')/J, -conj(g')/J)` at every grid point with `J > 1e-14` and
/// measures the distance from the identity.
pub fn inverse_derivative_identity_check(map: &HarmonicMap, grid: &DiskGrid) -> InverseDerivativeCheck {
    let mut out = InverseDerivativeCheck {
        holds: true,
        max_residual: 0.0,
        checked: 0,
        skipped: 0,
    };
    for z in grid.points(1.0, Boundary::Closed) {
        out.max_residual = out.max_residual.max(match inverse_residual(map, z) {
            Some(res) => {
                out.checked += 1;
                res
            }
            None => {
                out.skipped += 1;
                0.0
            }
        });
    }
    out.holds = out.max_residual <= INVERSE_RESIDUAL_TOL;
    out
}

/// Residual of `D(f^-1) Df - I` at `z`, with real-linear maps written as
/// `v -> a v + b conj(v)`; `None` when `J <= 1e-14`.
pub fn inverse_residual(map: &HarmonicMap, z: Complex64) -> Option<f64> {
    let hp = map.h().eval_derivative(z);
    let gp = map.g().eval_derivative(z);
    let j = hp.norm_sqr() - gp.norm_sqr();
    if j <= 1e-14 {
        return None;
    }
    let (a, b) = (hp, gp.conj());
    let (ia, ib) = (hp.conj() / j, -gp.conj() / j);
    // (ia, ib) o (a, b) = (ia a + ib conj(b), ia b + ib conj(a))
    let lin = ia * a + ib * b.conj();
    let anti = ia * b + ib * a.conj();
    Some((lin - 1.0).norm() + anti.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{normalized_map, rng, self_map, sense_preserving_map};
    use rand::Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn estimates(map: &HarmonicMap, omega: &Majorant, r: f64) -> [f64; 3] {
        LipschitzVariant::ALL.map(|v| lipschitz_estimate(map, omega, r, v, 2000, 42).unwrap().constant)
    }

    #[test]
    fn lipschitz_examples() {
        let w = Majorant::linear();
        for r in [0.1, 0.5, 0.9] {
            let [full, ..] = estimates(&HarmonicMap::identity(), &w, r);
            assert!((full - 1.0).abs() < 1e-9);
        }
        let [full, modulus, boundary] = estimates(&HarmonicMap::extremal(), &w, 0.5);
        assert!(full <= 1.5 && full >= modulus && modulus >= boundary && boundary > 0.0);
        let constant = HarmonicMap::from_real(&[0.4], &[0.2], "const");
        assert_eq!(estimates(&constant, &w, 0.5), [0.0; 3]);
        assert!(lipschitz_estimate(&constant, &w, 1.0, LipschitzVariant::FullDisk, 10, 1).is_err());
    }

    #[test]
    fn estimates_are_nested() {
        let mut g = rng(5);
        for _ in 0..20 {
            let f = sense_preserving_map(&mut g, 6);
            let w = Majorant::power(g.gen_range(0.2..=1.0)).unwrap();
            let [full, modulus, boundary] = estimates(&f, &w, g.gen_range(0.1..0.95));
            assert!(full >= modulus && modulus >= boundary && boundary >= 0.0);
        }
    }

    #[test]
    fn equivalence_examples() {
        let grid = DiskGrid::FAST;
        let rep = equivalence_witness(&HarmonicMap::identity(), &Majorant::linear(), 0.5, &grid, 42).unwrap();
        assert!(rep.chain_holds && rep.worst_chain_ratio < 0.2);
        assert!(rep.implied_constant >= rep.estimates[0].constant * (1.0 - 1e-12));
        let w = Majorant::power(0.5).unwrap();
        let rep = equivalence_witness(&HarmonicMap::extremal(), &w, 0.5, &grid, 42).unwrap();
        assert!(rep.chain_holds);
        let shifted = HarmonicMap::from_real(&[0.0, 1.0], &[0.0, 0.2], "b1");
        assert!(matches!(
            equivalence_witness(&shifted, &w, 0.5, &grid, 42),
            Err(Error::Hypothesis(_))
        ));
        let folded = HarmonicMap::from_real(&[0.0, 0.1], &[0.0, 0.0, 1.0], "fold");
        assert!(matches!(
            equivalence_witness(&folded, &w, 0.5, &grid, 42),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn chain_holds_for_random_class_maps() {
        let mut g = rng(8);
        for _ in 0..10 {
            let alpha = g.gen_range(0.5..2.0);
            let f = normalized_map(&mut g, 6, alpha);
            let w = Majorant::power(g.gen_range(0.3..=1.0)).unwrap();
            let rep = equivalence_witness(&f, &w, g.gen_range(0.2..0.9), &DiskGrid::FAST, 42).unwrap();
            assert!(rep.chain_holds, "{}", rep.worst_chain_ratio);
            assert!(rep.implied_constant >= rep.estimates[0].constant * (1.0 - 1e-9));
        }
    }

    #[test]
    fn schwarz_pick_examples() {
        let grid = DiskGrid::DEFAULT;
        let id = schwarz_pick_check(&HarmonicMap::identity(), 1.0, &grid).unwrap();
        assert!(id.holds && (id.max_ratio - 1.0).abs() < 1e-12);
        let half = HarmonicMap::from_real(&[0.0, 0.5], &[0.0], "half");
        let rep = schwarz_pick_check(&half, 1.0, &grid).unwrap();
        assert!(rep.holds && rep.max_ratio < 0.6);
        assert!(schwarz_pick_check(&HarmonicMap::extremal(), 3.0, &grid).is_err());
        let mut g = rng(12);
        for _ in 0..20 {
            let f = self_map(&mut g, 5, 0.9);
            let k = crate::area::class_constants(&f).unwrap().k_estimate;
            assert!(schwarz_pick_check(&f, k, &DiskGrid::FAST).unwrap().holds);
        }
    }

    fn hull_size(points: &[Complex64]) -> usize {
        let mut p: Vec<(f64, f64)> = points.iter().map(|z| (z.re, z.im)).collect();
        p.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
            (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
        };
        let mut hull: Vec<(f64, f64)> = Vec::new();
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &(f64, f64)>> =
                if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
            for &q in iter {
                while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
                    hull.pop();
                }
                hull.push(q);
            }
            hull.pop();
        }
        hull.len()
    }

    fn hull_oracle(map: &HarmonicMap, r: f64, n: usize) -> bool {
        let curve: Vec<_> = (0..n)
            .map(|k| map.value_at(Complex64::from_polar(r, TAU * k as f64 / n as f64)))
            .collect();
        hull_size(&curve) == n
    }

    #[test]
    fn convexity_examples() {
        let radii = [0.25, 0.5, 0.75, 0.9];
        let rep = fully_convex_check(&HarmonicMap::identity(), &radii, 4096).unwrap();
        assert!(rep.convex && !rep.inconclusive);
        let mild = HarmonicMap::from_real(&[0.0, 1.0], &[0.0, 0.0, 0.1], "mild");
        let rep = fully_convex_check(&mild, &radii, 4096).unwrap();
        assert!(rep.convex);
        for r in radii {
            assert!(hull_oracle(&mild, r, 1024));
        }
        let rep = fully_convex_check(&HarmonicMap::extremal(), &[0.9], 4096).unwrap();
        assert!(!rep.convex && rep.first_failure == Some(0.9));
        assert!(!hull_oracle(&HarmonicMap::extremal(), 0.9, 1024));
        assert!(fully_convex_check(&mild, &[0.5], 32).is_err());
        assert!(fully_convex_check(&mild, &[1.0], 64).is_err());
    }

    #[test]
    fn convexity_agrees_with_hull_oracle() {
        let mut g = rng(31);
        for _ in 0..30 {
            let f = sense_preserving_map(&mut g, 4);
            let r = g.gen_range(0.2..0.95);
            let rep = fully_convex_check(&f, &[r], 1024).unwrap();
            if !rep.inconclusive {
                assert_eq!(rep.convex, hull_oracle(&f, r, 1024), "r = {r}");
            }
        }
    }

    #[test]
    fn twice_traversed_circle_is_not_convex() {
        let curve: Vec<_> = (0..256).map(|k| Complex64::from_polar(1.0, 2.0 * TAU * k as f64 / 256.0)).collect();
        assert!(!convex_polygon(&curve).convex);
        let reversed: Vec<_> = (0..256).map(|k| Complex64::from_polar(1.0, -TAU * k as f64 / 256.0)).collect();
        assert!(convex_polygon(&reversed).convex);
    }

    #[test]
    fn sandwich_examples() {
        let rep = sandwich_check(&HarmonicMap::identity(), 0.5, 2000, 42).unwrap();
        assert!(rep.holds && rep.lower_margin > 0.49 && rep.upper_margin > 0.99);
        let mild = HarmonicMap::from_real(&[0.0, 1.0], &[0.0, 0.0, 0.1], "mild");
        let rep = sandwich_check(&mild, 0.5, 10_000, 42).unwrap();
        assert!(rep.holds && rep.h_collisions == 0 && rep.pairs == 10_000);
        assert!(matches!(
            sandwich_check(&HarmonicMap::extremal(), 0.95, 100, 42),
            Err(Error::Hypothesis(_))
        ));
        let shifted = HarmonicMap::from_real(&[0.1, 1.0], &[0.0], "shift");
        assert!(matches!(sandwich_check(&shifted, 0.5, 100, 42), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn inverse_identity_examples() {
        let grid = DiskGrid::DEFAULT;
        let rep = inverse_derivative_identity_check(&HarmonicMap::identity(), &grid);
        assert!(rep.holds && rep.max_residual == 0.0 && rep.skipped == 0);
        for (z, _) in disk_pairs(0.999, 100, 4) {
            assert!(inverse_residual(&HarmonicMap::extremal(), z).unwrap() <= 1e-12);
        }
        let rep = inverse_derivative_identity_check(&HarmonicMap::extremal(), &grid);
        assert!(rep.holds && rep.skipped > 0);
        let mut g = rng(2);
        for _ in 0..20 {
            let f = sense_preserving_map(&mut g, 6);
            assert!(inverse_derivative_identity_check(&f, &DiskGrid::FAST).holds);
        }
        let _ = c(0.0, 0.0);
    }
}
