use harmap_core::area::class_constants_on;
use harmap_core::bounds::{
    bound_h_alpha, bound_hc, bound_hc_envelope, bound_quasiregular, h_alpha_envelope, q_constant,
    r0, verify_map_bounds,
};
use harmap_core::landau::{covering_check, landau_radii, univalence_check};
use harmap_core::lipschitz::{
    equivalence_witness, fully_convex_check, inverse_derivative_identity_check, k_of_r,
    sandwich_check, schwarz_pick_check, INVERSE_RESIDUAL_TOL,
};
use harmap_core::majorant::majorant_regularity_check;
use harmap_core::norms::{
    bloch_norm, bmo_bound_majorant, bmo_norm, colonna_ratio_sup, gradient_majorant_check,
    majorant_constant, BoundaryFunction,
};
use harmap_core::{class_constants, Complex64, DiskGrid, Error, HarmonicMap, Majorant};

use crate::report::{Num, Report, Value};
use crate::Failure;

pub const COLONNA_PAIRS: usize = 4000;
pub const BOUNDARY_SAMPLES: usize = 256;
pub const UNIVALENCE_SAMPLES: usize = 2000;
pub const COVERING_POINTS: usize = 4096;
pub const SANDWICH_PAIRS: usize = 10_000;

pub struct Ctx {
    pub grid: DiskGrid,
    pub seed: u64,
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

fn bloch_section(ctx: &Ctx, map: &HarmonicMap, rep: &mut Report) {
    let bloch = bloch_norm(map, &ctx.grid);
    let col = colonna_ratio_sup(map, COLONNA_PAIRS, ctx.seed);
    let s = rep.section("bloch");
    s.push("norm", bloch.value);
    s.push("seminorm", bloch.seminorm);
    s.push("sup_at", bloch.at);
    s.push("colonna_seminorm", col.value);
    s.push("colonna_pair", format!("{} {}", Value::from(col.z), Value::from(col.w)));
    let gap = (col.value - bloch.seminorm).abs();
    let allowed = 0.02 * bloch.value;
    rep.check(
        "Colonna identity",
        gap <= allowed,
        Some(allowed - gap),
        format!("|{} - {}| within 2% of {}", Num(col.value), Num(bloch.seminorm), Num(bloch.value)),
    );
}

pub fn analyze(ctx: &Ctx, map: &HarmonicMap, r: f64, expected: Option<harmap_core::mapfile::Expected>) -> Result<Report, Failure> {
    let bounds = verify_map_bounds(map)?;
    let class = class_constants_on(map, r, &ctx.grid)?;
    let mut rep = Report::default();

    let s = rep.section("class");
    s.push("r", r);
    s.push("normalized", class.normalized);
    s.push("sense_preserving", class.sense_preserving);
    s.push("in_H", class.in_h);
    s.push("alpha", class.alpha);
    s.push("C", bounds.class.c);
    s.push("area_r", class.c);
    s.push("dilatation_sup_r", class.dilatation_sup);
    s.push("K_r", class.k_estimate);
    if class.in_h && r < 1.0 {
        let schwarz = k_of_r(r);
        s.push("K_r_schwarz", schwarz);
        rep.check(
            "dilatation within Schwarz bound",
            class.k_estimate <= schwarz * (1.0 + 1e-12),
            Some(schwarz - class.k_estimate),
            format!("K(r) measured {} <= (1+r)/(1-r) = {}", Num(class.k_estimate), Num(schwarz)),
        );
    }

    bloch_section(ctx, map, &mut rep);

    let rows = bounds
        .rows
        .iter()
        .map(|b| vec![b.n.into(), b.kind.name().into(), b.actual.into(), b.bound.into(), b.margin.into()])
        .collect();
    rep.table("bounds", &["n", "class", "actual", "bound", "margin"], rows);
    let worst = bounds.rows.iter().map(|b| b.margin).fold(f64::INFINITY, f64::min);
    rep.check(
        "coefficient bounds",
        bounds.violations == 0,
        worst.is_finite().then_some(worst),
        format!("{} rows, {} violations", bounds.rows.len(), bounds.violations),
    );
    for (kind, reason) in &bounds.skipped {
        rep.skip(&format!("{} bounds", kind.name()), reason.clone());
    }

    if let Some(e) = expected {
        let full = &bounds.class;
        for (name, want, got, tol) in [
            ("expected C", e.c, full.c, 1e-9),
            ("expected alpha", e.alpha, full.alpha, 1e-9),
            ("expected K", e.k, full.k_estimate, 1e-6),
        ] {
            if let Some(want) = want {
                rep.check(name, rel_close(got, want, tol), Some(got - want), format!("measured {}, expected {}", Num(got), Num(want)));
            }
        }
    }

    let inv = inverse_derivative_identity_check(map, &ctx.grid);
    rep.check(
        "inverse derivative identity",
        inv.holds,
        Some(INVERSE_RESIDUAL_TOL - inv.max_residual),
        format!("max residual {} over {} points, {} skipped", Num(inv.max_residual), inv.checked, inv.skipped),
    );

    let k = bounds.class.k_estimate;
    if !k.is_finite() {
        rep.skip("Schwarz-Pick lemma", "K is infinite");
    } else {
        match schwarz_pick_check(map, k, &ctx.grid) {
            Ok(sp) => rep.check(
                "Schwarz-Pick lemma",
                sp.holds,
                Some(1.0 - sp.max_ratio),
                format!("max ratio {} at {}", Num(sp.max_ratio), Value::from(sp.at)),
            ),
            Err(Error::Precondition(m)) => rep.skip("Schwarz-Pick lemma", m),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(rep)
}

pub fn landau(ctx: &Ctx, c: Option<f64>, alpha: Option<f64>, map: Option<&HarmonicMap>) -> Result<Report, Failure> {
    let measured = map.map(class_constants).transpose()?;
    let (c, alpha) = match (c, alpha, &measured) {
        (Some(c), Some(a), _) => (c, a),
        (c, a, Some(m)) => (c.unwrap_or(m.c), a.unwrap_or(m.alpha)),
        _ => return Err(Failure::Parameter("--C and --alpha are required without a mapping file".into())),
    };
    let radii = landau_radii(c, alpha)?;
    let mut rep = Report::default();
    let s = rep.section("radii");
    s.push("C", c);
    s.push("alpha", alpha);
    s.push("r0", radii.r0);
    s.push("Q", radii.q);
    s.push("rho", radii.rho);
    s.push("r0_rho", radii.r0_rho);
    s.push("R0", radii.big_r0);
    s.push("identity_residual", radii.identity_residual);
    rep.check(
        "radius identity",
        radii.identity_residual <= 1e-12,
        Some(1e-12 - radii.identity_residual),
        "alpha = e Q rho (2 - rho)/(1 - rho)^2",
    );
    rep.check("R0 positive", radii.big_r0 > 0.0, Some(radii.big_r0), "");

    if let (Some(map), Some(m)) = (map, measured) {
        if !m.in_h {
            return Err(Failure::Hypothesis("mapping is not in the normalized sense-preserving class".into()));
        }
        if m.c > c * (1.0 + 1e-9) {
            return Err(Failure::Hypothesis(format!("mapping area {} exceeds C = {c}", m.c)));
        }
        if !rel_close(m.alpha, alpha, 1e-9) {
            return Err(Failure::Hypothesis(format!("mapping has |f_z(0)| = {}, not alpha = {alpha}", m.alpha)));
        }
        let uni = univalence_check(map, radii.r0_rho, UNIVALENCE_SAMPLES, ctx.seed)?;
        let detail = match uni.witness {
            Some(w) => format!("witness {w:?}"),
            None => format!("{UNIVALENCE_SAMPLES} samples, min image separation {}", Num(uni.min_separation)),
        };
        rep.check("univalent on D(r0 rho)", uni.passed, None, detail);
        let cov = covering_check(map, radii.r0_rho, radii.big_r0, COVERING_POINTS)?;
        rep.check(
            "image covers D(R0)",
            cov.covered,
            Some(cov.min_modulus - radii.big_r0),
            format!(
                "min |f| on |z| = r0 rho is {}, winding {}",
                Num(cov.min_modulus),
                cov.winding.map_or("n/a".to_string(), |w| w.to_string())
            ),
        );
    }
    Ok(rep)
}

pub fn bounds(c: f64, k: Option<f64>, alpha: Option<f64>, n_max: usize) -> Result<Report, Failure> {
    if n_max == 0 {
        return Err(Failure::Parameter("--n-max must be at least 1".into()));
    }
    let q = q_constant(c);
    if let Some(a) = alpha {
        if !(a > 0.0 && a < q) {
            return Err(Failure::Parameter(format!("alpha must lie in (0, Q(r0)) = (0, {q})")));
        }
    }
    let mut columns = vec!["n", "H(C)", "H(C) envelope"];
    if k.is_some() {
        columns.push("quasiregular");
    }
    if alpha.is_some() {
        columns.extend(["H_alpha(C)", "alpha envelope", "Q e/r0^(n-1)"]);
    }
    let dash = || Value::from("-");
    let mut rows = Vec::new();
    let mut chain_ok = true;
    let mut chain_margin = f64::INFINITY;
    let mut strict = |lo: f64, hi: f64| {
        chain_ok &= lo < hi;
        chain_margin = chain_margin.min((hi - lo) / hi);
    };
    for n in 1..=n_max {
        let mut row: Vec<Value> = vec![n.into(), bound_hc(c, n)?.into()];
        if n >= 2 {
            let env = bound_hc_envelope(c, n)?;
            strict(bound_hc(c, n)?, env);
            row.push(env.into());
        } else {
            row.push(dash());
        }
        if let Some(k) = k {
            row.push(bound_quasiregular(c, k, n)?.into());
        }
        if let Some(a) = alpha {
            if n >= 2 {
                let b = bound_h_alpha(c, a, n)?;
                let env = h_alpha_envelope(c, n)?;
                let outer = q * std::f64::consts::E / r0().powi(n as i32 - 1);
                strict(b, env);
                strict(env, outer);
                row.extend([b.into(), env.into(), outer.into()]);
            } else {
                row.extend([dash(), dash(), dash()]);
            }
        }
        rows.push(row);
    }
    let mut rep = Report::default();
    let s = rep.section("constants");
    s.push("C", c);
    if let Some(k) = k {
        s.push("K", k);
    }
    if let Some(a) = alpha {
        s.push("alpha", a);
    }
    s.push("r0", r0());
    s.push("Q", q);
    rep.table("bounds", &columns, rows);
    if n_max >= 2 {
        rep.check(
            "strict inequality chain",
            chain_ok,
            Some(chain_margin),
            "each bound below its envelope (margin relative)",
        );
    }
    Ok(rep)
}

fn bmo_bound_or_zero(m: f64, r: f64, omega: &Majorant) -> Result<f64, Failure> {
    if m == 0.0 {
        return Ok(0.0);
    }
    Ok(bmo_bound_majorant(m, r, omega)?)
}

pub fn norms(ctx: &Ctx, map: &HarmonicMap, radii: &[f64]) -> Result<Report, Failure> {
    let mut rep = Report::default();
    rep.section("value").push("f(0)", map.value_at(Complex64::new(0.0, 0.0)));
    bloch_section(ctx, map, &mut rep);
    let omega = Majorant::linear();
    let m = majorant_constant(map, &omega, &ctx.grid);
    rep.section("majorant").push("M_linear", m);
    let mut rows = Vec::new();
    let mut worst = f64::INFINITY;
    for &r in radii {
        let psi = BoundaryFunction::from_map(map, r, BOUNDARY_SAMPLES)?;
        let norm = bmo_norm(&psi, &ctx.grid);
        let bound = bmo_bound_or_zero(m, r, &omega)?;
        worst = worst.min(bound - norm.value);
        rows.push(vec![r.into(), norm.value.into(), norm.at.into(), bound.into()]);
    }
    rep.table("bmo", &["r", "norm", "sup_at", "bound"], rows);
    rep.check(
        "BMO bound with omega(t) = t",
        worst >= -1e-6,
        Some(worst),
        format!("{} radii, M = sup (1-|z|) Lambda_f", radii.len()),
    );
    Ok(rep)
}

pub fn bmo(ctx: &Ctx, map: &HarmonicMap, r: f64, beta: f64) -> Result<Report, Failure> {
    let omega = Majorant::power(beta)?;
    let psi = BoundaryFunction::from_map(map, r, BOUNDARY_SAMPLES)?;
    let m = majorant_constant(map, &omega, &ctx.grid);
    let gate = gradient_majorant_check(map, m, &omega, &ctx.grid);
    let norm = bmo_norm(&psi, &ctx.grid);
    let bound = bmo_bound_or_zero(m, r, &omega)?;
    let reg = majorant_regularity_check(&omega, 1.0, 16)?;

    let mut rep = Report::default();
    let s = rep.section("majorant");
    s.push("beta", beta);
    s.push("M", m);
    s.push("cond1", reg.cond1);
    s.push("cond2", reg.cond2);
    s.push("m1", reg.m1);
    s.push("m2", reg.m2);
    s.push("divergent_tail", reg.divergent_tail);
    let s = rep.section("bmo");
    s.push("r", r);
    s.push("samples", BOUNDARY_SAMPLES);
    s.push("norm", norm.value);
    s.push("sup_at", norm.at);
    s.push("bound", bound);
    rep.check(
        "gradient majorant",
        gate.holds,
        Some(1.0 - gate.worst_ratio),
        format!("Lambda_f <= M omega(1/(1-|z|)), worst ratio {}", Num(gate.worst_ratio)),
    );
    rep.check(
        "BMO bound",
        norm.value <= bound + 1e-6,
        Some(bound - norm.value),
        format!("{} <= {}", Num(norm.value), Num(bound)),
    );
    Ok(rep)
}

/// With `require` unset, a non-convex image is reported but not counted as
/// a failed check.
pub fn convex(ctx: &Ctx, map: &HarmonicMap, radii: &[f64], n_boundary: usize, require: bool) -> Result<Report, Failure> {
    let conv = fully_convex_check(map, radii, n_boundary)?;
    let mut rep = Report::default();
    let s = rep.section("convexity");
    s.push("n_boundary", n_boundary);
    s.push("convex", conv.convex);
    s.push("inconclusive", conv.inconclusive);
    s.push("first_failure", conv.first_failure.map_or(Value::from("none"), Value::from));
    let rows = conv
        .radii
        .iter()
        .map(|c| vec![c.r.into(), c.convex.into(), c.winding.into(), c.flat_fraction.into()])
        .collect();
    rep.table("radii", &["r", "convex", "winding", "flat_fraction"], rows);
    if require {
        rep.check(
            "fully convex",
            conv.convex,
            None,
            match conv.first_failure {
                Some(r) => format!("image of |z| = {} is not convex", Num(r)),
                None => format!("{} radii", radii.len()),
            },
        );
    }
    if conv.inconclusive {
        rep.skip("convexity resolution", "more than 1% of turning products are flat");
    }
    let r_max = radii.iter().cloned().fold(0.0, f64::max);
    if !conv.convex {
        rep.skip("sandwich inequalities", "images are not convex");
        return Ok(rep);
    }
    match sandwich_check(map, r_max, SANDWICH_PAIRS, ctx.seed) {
        Ok(sw) => {
            let s = rep.section("sandwich");
            s.push("r", r_max);
            s.push("pairs", sw.pairs);
            s.push("lower_margin", sw.lower_margin);
            s.push("upper_margin", sw.upper_margin);
            s.push("h_collisions", sw.h_collisions);
            rep.check(
                "sandwich inequalities",
                sw.holds,
                Some(sw.lower_margin.min(sw.upper_margin)),
                format!("{} violations, {} h collisions", sw.violations, sw.h_collisions),
            );
        }
        Err(Error::Hypothesis(m)) => rep.skip("sandwich inequalities", m),
        Err(e) => return Err(e.into()),
    }
    Ok(rep)
}

pub fn lipschitz(ctx: &Ctx, map: &HarmonicMap, r: f64, beta: f64) -> Result<Report, Failure> {
    let omega = Majorant::power(beta)?;
    let eq = equivalence_witness(map, &omega, r, &ctx.grid, ctx.seed)?;
    let mut rep = Report::default();
    let rows = eq
        .estimates
        .iter()
        .map(|e| vec![e.variant.name().into(), e.constant.into(), e.n_pairs.into()])
        .collect();
    rep.table("estimates", &["variant", "constant", "pairs"], rows);
    let s = rep.section("chain");
    s.push("r", r);
    s.push("beta", beta);
    s.push("M3", eq.m3);
    s.push("K_r", eq.k_r);
    s.push("6_M3_K_r", 6.0 * eq.m3 * eq.k_r);
    s.push("worst_ratio", eq.worst_chain_ratio);
    s.push("worst_at", eq.worst_at);
    s.push("implied_constant", eq.implied_constant);
    let [full, modulus, boundary] = eq.estimates.map(|e| e.constant);
    rep.check(
        "estimates nested",
        full >= modulus && modulus >= boundary,
        Some((full - modulus).min(modulus - boundary)),
        format!("{} >= {} >= {}", Num(full), Num(modulus), Num(boundary)),
    );
    rep.check(
        "gradient chain",
        eq.chain_holds,
        Some(1.0 - eq.worst_chain_ratio),
        "Lambda_f(z) <= 6 M3 K(r) omega(d)/d on the grid",
    );
    rep.check(
        "segment integral dominates",
        eq.implied_constant >= full * (1.0 - 1e-9),
        Some(eq.implied_constant - full),
        format!("implied {} >= sampled {}", Num(eq.implied_constant), Num(full)),
    );
    Ok(rep)
}
