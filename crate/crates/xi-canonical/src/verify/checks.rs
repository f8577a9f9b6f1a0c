//! The individual checks. Anchors refer to docs/checks.md.

use super::{SuiteContext, VerificationReport};
use crate::canonical::{
    ab_below_one, count_zeros_contour, direct_ab, evolve, interlacing_ok,
    schrodinger_residual, zeros_of_a, zeros_of_b, StepControl,
};
use crate::kernel::KernelContext;
use crate::operator::{
    self, build_grid, build_grid_with_panels, bump, discretize, fredholm_series, solve_phi,
    watson_direct, watson_via_h1,
};
use crate::specfun;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub(super) type CheckFn = fn(&SuiteContext) -> VerificationReport;

pub(super) fn all() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("c01_theta_unit_modulus", c01 as CheckFn),
        ("c02_theta_normalization_reflection", c02),
        ("c03_mellin_identities", c03),
        ("c04_h1_two_route", c04),
        ("c05_operator_laws", c05),
        ("c06_logdet_derivative", c06),
        ("c07_fredholm_series_oracle", c07),
        ("c08_m_source_consistency", c08),
        ("c09_canonical_system", c09),
        ("c10_limit_law", c10),
        ("c11_schrodinger_residual", c11),
        ("c12_zero_count_interlacing", c12),
        ("c13_h1_growth_trend", c13),
        ("c14_watson_equality", c14),
    ]
}

/// All anchor strings; the docs test checks them against the catalog.
pub fn anchors() -> Vec<&'static str> {
    vec![
        "identity:theta-unit-modulus",
        "identity:theta-normalization-reflection",
        "identity:mellin-h-to-theta",
        "identity:h1-two-route",
        "law:operator-support-contraction-hs",
        "identity:logdet-derivative",
        "oracle:fredholm-series",
        "identity:m-source-consistency",
        "law:canonical-system",
        "law:limit-at-one",
        "law:schrodinger-pair",
        "oracle:zero-count-interlacing",
        "trend:h1-growth",
        "identity:watson-equality",
    ]
}

fn report(
    anchor: &str,
    computed: Vec<f64>,
    tolerance: f64,
    passed: bool,
    hard: bool,
    detail: String,
) -> VerificationReport {
    VerificationReport {
        name: String::new(),
        anchor: anchor.to_string(),
        computed,
        tolerance,
        passed,
        hard,
        detail,
        runtime_ms: 0,
    }
}

fn error_report(anchor: &str, err: impl std::fmt::Display) -> VerificationReport {
    report(anchor, vec![], f64::NAN, false, true, format!("error: {err}"))
}

/// Unitarity |Θ_ω(u)| = 1 on the real line, 200 points per ω in
/// {0.75, 1.25, 1.5, 2.5} drawn from the seeded sampler.
fn c01(s: &SuiteContext) -> VerificationReport {
    let anchor = "identity:theta-unit-modulus";
    let tol = s.config.tolerance("theta_unit_modulus", 1e-9);
    let mut rng = StdRng::seed_from_u64(s.config.seed);
    let mut worst = 0.0f64;
    for &omega in &[0.75, 1.25, 1.5, 2.5] {
        for _ in 0..200 {
            let u: f64 = rng.gen_range(-40.0..40.0);
            match specfun::theta_omega(Complex64::new(u, 0.0), omega) {
                Ok(t) => worst = worst.max((t.norm() - 1.0).abs()),
                Err(e) => return error_report(anchor, e),
            }
        }
    }
    report(
        anchor,
        vec![worst],
        tol,
        worst < tol,
        true,
        format!("worst | |Θ(u)|-1 | = {worst:.3e} over 800 samples"),
    )
}

/// Θ_ω(0) = 1 and Θ_ω(z)Θ_ω(-z) = 1 on 50 seeded complex samples.
fn c02(s: &SuiteContext) -> VerificationReport {
    let anchor = "identity:theta-normalization-reflection";
    let tol0 = s.config.tolerance("theta_normalization", 1e-10);
    let tol_refl = s.config.tolerance("theta_reflection", 1e-8);
    let omega = if s.config.omega > 0.5 { s.config.omega } else { 1.5 };
    let at0 = match specfun::theta_omega(Complex64::new(0.0, 0.0), omega) {
        Ok(t) => (t - 1.0).norm(),
        Err(e) => return error_report(anchor, e),
    };
    let mut rng = StdRng::seed_from_u64(s.config.seed ^ 0xc02);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let z = Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-3.0..3.0));
        let p = specfun::theta_omega(z, omega).and_then(|a| {
            specfun::theta_omega(-z, omega).map(|b| a * b)
        });
        match p {
            Ok(p) => worst = worst.max((p - 1.0).norm()),
            Err(e) => return error_report(anchor, e),
        }
    }
    let passed = at0 < tol0 && worst < tol_refl;
    report(
        anchor,
        vec![at0, worst],
        tol_refl,
        passed,
        true,
        format!("|Θ(0)-1| = {at0:.3e}; worst |Θ(z)Θ(-z)-1| = {worst:.3e}"),
    )
}

/// Truncated Mellin transforms against Θ and (i/z)Θ for ω in {1.2, 1.5, 2}.
fn c03(s: &SuiteContext) -> VerificationReport {
    let anchor = "identity:mellin-h-to-theta";
    let tol = s.config.tolerance("mellin_identity", 1e-5);
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for &omega in &[1.2, 1.5, 2.0] {
        let ctx = match KernelContext::with_proxy(omega, 300, 1e-4, 210.0) {
            Ok(c) => c,
            Err(e) => return error_report(anchor, e),
        };
        for &re in &[0.0, 1.0, -0.7] {
            let z = Complex64::new(re, omega + 1.5);
            let run = || -> crate::error::Result<(f64, f64)> {
                let theta = specfun::theta_omega(z, omega)?;
                let h = ctx.mellin_h(z, 200.0)?;
                let rel_h = (h.value - theta).norm() / theta.norm();
                let h1 = ctx.mellin_h1(z, 200.0)?;
                let expected = Complex64::i() / z * theta;
                let rel_h1 = (h1.value - expected).norm() / expected.norm();
                Ok((rel_h, rel_h1))
            };
            match run() {
                Ok((a, b)) => worst = worst.max(a).max(b),
                Err(e) => return error_report(anchor, e),
            }
        }
        detail.push_str(&format!("ω={omega} ok; "));
    }
    report(
        anchor,
        vec![worst],
        tol,
        worst < tol,
        true,
        format!("worst relative Mellin mismatch {worst:.3e} ({detail})"),
    )
}

/// h_ω⟨1⟩ sum route vs integral route on 100 points of [1.1, 20].
fn c04(s: &SuiteContext) -> VerificationReport {
    let anchor = "identity:h1-two-route";
    let tol = s.config.tolerance("h1_two_route", 1e-7);
    let omega = if s.config.omega > 0.5 { s.config.omega } else { 1.5 };
    let ctx = match KernelContext::new(omega, 64, 1e-10) {
        Ok(c) => c,
        Err(e) => return error_report(anchor, e),
    };
    let mut worst = 0.0f64;
    for k in 0..100 {
        let x = 1.1 + 18.9 * (k as f64 + 0.5) / 100.0;
        let run = || -> crate::error::Result<f64> {
            Ok((ctx.h1(x)? - ctx.h1_integral(x)?).abs())
        };
        match run() {
            Ok(d) => worst = worst.max(d),
            Err(e) => return error_report(anchor, e),
        }
    }
    report(
        anchor,
        vec![worst],
        tol,
        worst < tol,
        true,
        format!("worst |sum - integral| = {worst:.3e} on [1.1, 20]"),
    )
}

/// Operator laws: exact zero below a = 1; spectral radius < 1 on the
/// (ω, a) grid; Frobenius norm within the Hilbert–Schmidt bound.
fn c05(_s: &SuiteContext) -> VerificationReport {
    let anchor = "law:operator-support-contraction-hs";
    let mut detail = String::new();
    let mut passed = true;
    // zero law
    let ctx15 = match KernelContext::new(1.5, 64, 1e-10) {
        Ok(c) => c,
        Err(e) => return error_report(anchor, e),
    };
    for &a in &[0.5, 1.0] {
        match discretize(&ctx15, &build_grid(a, 12, 0)) {
            Ok(op) => {
                let nz = op.matrix.iter().filter(|v| **v != 0.0).count();
                if nz != 0 {
                    passed = false;
                    detail.push_str(&format!("nonzero matrix at a={a}; "));
                }
            }
            Err(e) => return error_report(anchor, e),
        }
    }
    // contraction on the grid of (ω, a) pairs
    let mut rho_worst = 0.0f64;
    for &omega in &[1.25, 1.5, 2.0] {
        let ctx = match KernelContext::new(omega, 64, 1e-10) {
            Ok(c) => c,
            Err(e) => return error_report(anchor, e),
        };
        for &a in &[1.5, 2.0, 3.0] {
            match discretize(&ctx, &build_grid(a, 16, 1)) {
                Ok(op) => {
                    let rho = op.spectral_radius();
                    rho_worst = rho_worst.max(rho);
                    if rho >= 1.0 {
                        passed = false;
                        detail.push_str(&format!("ρ={rho:.7} at (ω={omega}, a={a}); "));
                    }
                }
                Err(e) => return error_report(anchor, e),
            }
        }
    }
    // Hilbert–Schmidt bound
    for &a in &[1.5, 2.0] {
        let run = || -> crate::error::Result<(f64, f64)> {
            let op = discretize(&ctx15, &build_grid(a, 16, 0))?;
            Ok((op.frobenius_sq(), operator::hs_norm_bound(&ctx15, a)?))
        };
        match run() {
            Ok((fro, bound)) => {
                if fro > bound * (1.0 + 1e-6) {
                    passed = false;
                    detail.push_str(&format!("Frobenius² {fro:.4} > bound {bound:.4} at a={a}; "));
                }
            }
            Err(e) => return error_report(anchor, e),
        }
    }
    if detail.is_empty() {
        detail = format!("zero law exact; worst discrete ρ = {rho_worst:.7}; HS bound holds");
    }
    report(anchor, vec![rho_worst], 1.0, passed, true, detail)
}

/// d/da log det(I ± H) = ±φ_a^±(a) by centered differences with h = 1e-4·a.
fn c06(s: &SuiteContext) -> VerificationReport {
    let anchor = "identity:logdet-derivative";
    let tol = s.config.tolerance("logdet_derivative", 1e-3);
    let ctx = match KernelContext::new(1.5, 64, 1e-10) {
        Ok(c) => c,
        Err(e) => return error_report(anchor, e),
    };
    let mut worst = 0.0f64;
    let mut detail = String::new();
    let mut passed = true;
    for &a in &[1.5, 2.0, 2.5] {
        let run = || -> crate::error::Result<(f64, f64, f64)> {
            let h = 1e-4 * a;
            // fixed panel budget so the grid varies smoothly across the stencil
            let panels = operator::base_panels(a) * 2;
            let dets = |aa: f64| -> crate::error::Result<(f64, f64)> {
                let op = discretize(&ctx, &build_grid_with_panels(aa, 20, panels))?;
                op.factorize(Some(&ctx))?.det_pair()
            };
            let (pp, pm) = dets(a + h)?;
            let (mp, mm) = dets(a - h)?;
            let d_plus = (pp.ln() - mp.ln()) / (2.0 * h);
            let d_minus = (pm.ln() - mm.ln()) / (2.0 * h);
            let op = discretize(&ctx, &build_grid_with_panels(a, 20, panels))?;
            let f = op.factorize(Some(&ctx))?;
            let phi_p = solve_phi(&ctx, &f, 1.0)?.at_boundary(&ctx)?;
            let phi_m = solve_phi(&ctx, &f, -1.0)?.at_boundary(&ctx)?;
            let rel_p = (d_plus - phi_p).abs() / phi_p.abs().max(1e-12);
            let rel_m = (d_minus + phi_m).abs() / phi_m.abs().max(1e-12);
            // diagnostic: the same identity summed over both signs through
            // the determinant ratio, which stays meaningful longer
            let ratio_d = d_plus - d_minus;
            let rel_sum = (ratio_d - (phi_p + phi_m)).abs() / (phi_p + phi_m).abs().max(1e-12);
            Ok((rel_p, rel_m, rel_sum))
        };
        match run() {
            Ok((rp, rm, rsum)) => {
                worst = worst.max(rp).max(rm);
                if rp >= tol || rm >= tol {
                    passed = false;
                }
                detail.push_str(&format!(
                    "a={a}: +side {rp:.2e}, -side {rm:.2e} (ratio form {rsum:.2e}); "
                ));
            }
            Err(e) => {
                passed = false;
                detail.push_str(&format!("a={a}: error {e}; "));
            }
        }
    }
    report(anchor, vec![worst], tol, passed, true, detail)
}

/// Truncated Fredholm series (order ≤ 6) against the matrix determinants at
/// a = 1.3.
fn c07(s: &SuiteContext) -> VerificationReport {
    let anchor = "oracle:fredholm-series";
    let tol = s.config.tolerance("fredholm_series", 1e-6);
    let ctx = match KernelContext::new(1.5, 64, 1e-10) {
        Ok(c) => c,
        Err(e) => return error_report(anchor, e),
    };
    let a = 1.3;
    let run = || -> crate::error::Result<(f64, f64, f64)> {
        let op = discretize(&ctx, &build_grid(a, 20, 2))?;
        let (dp, dm) = operator::det_pair(&ctx, &op)?;
        let plus = fredholm_series(&ctx, a, -1.0, 6, 1.0)?;
        let minus = fredholm_series(&ctx, a, 1.0, 6, 1.0)?;
        Ok((
            (plus.value - dp).abs(),
            (minus.value - dm).abs(),
            plus.eigen_tail,
        ))
    };
    match run() {
        Ok((ep, em, tail)) => {
            let worst = ep.max(em);
            report(
                anchor,
                vec![ep, em, tail],
                tol,
                worst < tol,
                true,
                format!(
                    "series(6) vs dets: |Δ+| = {ep:.3e}, |Δ-| = {em:.3e}; order-6 remainder of the discretized operator is {tail:.3e}"
                ),
            )
        }
        Err(e) => error_report(anchor, e),
    }
}

/// Determinant-ratio source of m(a) against the exp-integral source on
/// a ∈ [1, survey_a_max].
fn c08(s: &SuiteContext) -> VerificationReport {
    let anchor = "identity:m-source-consistency";
    let tol = s.config.tolerance("m_source_consistency", 1e-4);
    let survey = match &s.survey {
        Some(Ok(c)) => c,
        Some(Err(e)) => return error_report(anchor, e),
        None => return error_report(anchor, "operator regime needs omega > 1"),
    };
    let precision = match &s.curve {
        Some(Ok(c)) => c,
        _ => return error_report(anchor, "precision curve unavailable"),
    };
    let mut worst = 0.0f64;
    let mut uncovered = Vec::new();
    let mut certified = 0usize;
    for sample in &survey.det_samples {
        // use the high-resolution march where it covers the sample
        let log_m = if sample.a <= 1.6 {
            precision.log_m(sample.a)
        } else {
            survey.log_m(sample.a)
        };
        if sample.certified && log_m.is_finite() {
            let rel = ((sample.log_ratio - log_m).exp() - 1.0).abs();
            worst = worst.max(rel);
            certified += 1;
        } else {
            uncovered.push(sample.a);
        }
    }
    let passed = uncovered.is_empty() && worst < tol;
    let detail = if uncovered.is_empty() {
        format!("all {certified} samples certified; worst relative m mismatch {worst:.3e}")
    } else {
        format!(
            "worst relative m mismatch {worst:.3e} over {certified} certified samples; determinant source not resolvable in double precision at a ∈ {uncovered:.2?} (spectrum of the truncated operator reaches ±1 within discretization error there)"
        )
    };
    report(anchor, vec![worst, certified as f64], tol, passed, true, detail)
}

/// Canonical-system laws: parity, realness along the evolution, and the
/// two-route agreement at Im z = ω + 2.
fn c09(s: &SuiteContext) -> VerificationReport {
    let anchor = "law:canonical-system";
    let tol_parity = s.config.tolerance("canonical_parity", 1e-6);
    let tol_real = s.config.tolerance("canonical_realness", 1e-8);
    let tol_two = s.config.tolerance("canonical_two_route", 1e-3);
    let curve = match &s.curve {
        Some(Ok(c)) => c,
        Some(Err(e)) => return error_report(anchor, e),
        None => return error_report(anchor, "operator regime needs omega > 1"),
    };
    let omega = curve.omega;
    let mut rng = StdRng::seed_from_u64(s.config.seed ^ 0xc09);
    let mut worst_parity = 0.0f64;
    let mut worst_real = 0.0f64;
    for _ in 0..6 {
        let z = Complex64::new(rng.gen_range(-4.0..4.0), rng.gen_range(-1.0..1.0));
        let run = || -> crate::error::Result<(f64, f64)> {
            let sp = evolve(curve, z, 1.5, StepControl::default())?;
            let sm = evolve(curve, -z, 1.5, StepControl::default())?;
            let scale = sp.a_big.norm() + sp.b_big.norm();
            let parity = ((sp.a_big - sm.a_big).norm() + (sp.b_big + sm.b_big).norm()) / scale;
            let zr = Complex64::new(z.re.abs().max(0.5), 0.0);
            let sr = evolve(curve, zr, 1.5, StepControl::default())?;
            let real = (sr.a_big.im.abs() + sr.b_big.im.abs())
                / (sr.a_big.norm() + sr.b_big.norm());
            Ok((parity, real))
        };
        match run() {
            Ok((p, r)) => {
                worst_parity = worst_parity.max(p);
                worst_real = worst_real.max(r);
            }
            Err(e) => return error_report(anchor, e),
        }
    }
    // two-route at Im z = ω + 2, a ∈ {1.5, 2}
    let mut two_route = Vec::new();
    let mut detail_two = String::new();
    for &a in &[1.5f64, 2.0] {
        let z = Complex64::new(0.7, omega + 2.0);
        let run = || -> crate::error::Result<f64> {
            let prof_a = curve
                .profile_at(a)
                .ok_or_else(|| crate::error::Error::Domain(format!("no profile at {a}")))?
                .a;
            let ode = evolve(curve, z, prof_a, StepControl::default())?;
            let dir = direct_ab(curve, prof_a, z, 110.0, 1e-4)?;
            let scale = ode.a_big.norm() + ode.b_big.norm();
            Ok(((ode.a_big - dir.a_big).norm() + (ode.b_big - dir.b_big).norm()) / scale)
        };
        match run() {
            Ok(r) => {
                two_route.push(r);
                detail_two.push_str(&format!("a={a}: two-route {r:.2e}; "));
            }
            Err(e) => {
                two_route.push(f64::NAN);
                detail_two.push_str(&format!("a={a}: {e}; "));
            }
        }
    }
    let two_ok = two_route.iter().all(|r| r.is_finite() && *r < tol_two);
    let passed = worst_parity < tol_parity && worst_real < tol_real && two_ok;
    report(
        anchor,
        vec![worst_parity, worst_real, two_route[0]],
        tol_two,
        passed,
        true,
        format!(
            "parity {worst_parity:.2e}, realness {worst_real:.2e}; {detail_two}"
        ),
    )
}

/// Limit law at a → 1 from both sides at z = 2.
fn c10(s: &SuiteContext) -> VerificationReport {
    let anchor = "law:limit-at-one";
    let tol = s.config.tolerance("limit_law", 1e-3);
    let curve = match &s.curve {
        Some(Ok(c)) => c,
        Some(Err(e)) => return error_report(anchor, e),
        None => return error_report(anchor, "operator regime needs omega > 1"),
    };
    let omega = curve.omega;
    let z = Complex64::new(2.0, 0.0);
    let a_ref = match specfun::ab_omega(z, omega) {
        Ok((a, _)) => a,
        Err(e) => return error_report(anchor, e),
    };
    let mut above = Vec::new();
    for &a in &[1.05, 1.01, 1.001] {
        match evolve(curve, z, a, StepControl::default()) {
            Ok(st) => above.push((st.a_big - a_ref).norm()),
            Err(e) => return error_report(anchor, e),
        }
    }
    let mut below = Vec::new();
    for &a in &[0.95, 0.99, 0.999] {
        match ab_below_one(omega, a, z) {
            Ok(st) => below.push((st.a_big - a_ref).norm()),
            Err(e) => return error_report(anchor, e),
        }
    }
    let mono_above = above[0] > above[1] && above[1] > above[2];
    let mono_below = below[0] > below[1] && below[1] > below[2];
    let passed = mono_above && mono_below && above[2] < tol && below[2] < tol;
    report(
        anchor,
        vec![above[2], below[2]],
        tol,
        passed,
        true,
        format!(
            "|A_a - A^ω| above: {:?} (monotone {mono_above}); below: {:?} (monotone {mono_below})",
            above.iter().map(|v| format!("{v:.3e}")).collect::<Vec<_>>(),
            below.iter().map(|v| format!("{v:.3e}")).collect::<Vec<_>>()
        ),
    )
}

/// Schrödinger residual at five interior (a, z) points.
fn c11(s: &SuiteContext) -> VerificationReport {
    let anchor = "law:schrodinger-pair";
    let tol = s.config.tolerance("schrodinger_residual", 1e-3);
    let curve = match &s.curve {
        Some(Ok(c)) => c,
        Some(Err(e)) => return error_report(anchor, e),
        None => return error_report(anchor, "operator regime needs omega > 1"),
    };
    let points = [
        (1.15, 1.5),
        (1.2, 3.0),
        (1.25, 2.0),
        (1.3, 1.0),
        (1.35, 2.5),
    ];
    let mut worst = 0.0f64;
    for &(a, zre) in &points {
        match schrodinger_residual(curve, a, Complex64::new(zre, 0.0), 4e-3) {
            Ok(r) => worst = worst.max(r),
            Err(e) => return error_report(anchor, e),
        }
    }
    report(
        anchor,
        vec![worst],
        tol,
        worst < tol,
        true,
        format!("worst relative residual {worst:.3e} over 5 interior points"),
    )
}

/// Zero count of A^ω on [0, 30] against the contour count, plus interlacing
/// with the zeros of B^ω.
fn c12(s: &SuiteContext) -> VerificationReport {
    let anchor = "oracle:zero-count-interlacing";
    let omega = if s.config.omega > 0.5 { s.config.omega } else { 1.5 };
    let t_max = 30.0;
    let run = || -> crate::error::Result<(usize, usize, bool)> {
        let za = zeros_of_a(omega, t_max)?;
        let contour = count_zeros_contour(omega, t_max, 1.0)?;
        let zb = zeros_of_b(omega, t_max)?;
        Ok((za.len(), contour, interlacing_ok(&za, &zb)))
    };
    match run() {
        Ok((bracketed, contour, inter)) => {
            let passed = bracketed == contour && inter;
            report(
                anchor,
                vec![bracketed as f64, contour as f64],
                0.0,
                passed,
                true,
                format!(
                    "bracketed {bracketed} real zeros, contour count {contour}, interlacing {inter}"
                ),
            )
        }
        Err(e) => error_report(anchor, e),
    }
}

/// √x h_ω⟨1⟩(x) drift toward 1 (conditional asymptotics; recorded, not
/// gated).
fn c13(s: &SuiteContext) -> VerificationReport {
    let anchor = "trend:h1-growth";
    let omega = if s.config.omega > 0.5 { s.config.omega } else { 1.5 };
    let ctx = match KernelContext::new(omega, 1100, 1e-10) {
        Ok(c) => c,
        Err(e) => return error_report(anchor, e),
    };
    let mut values = Vec::new();
    for &x in &[100.0, 300.0, 1000.0] {
        match ctx.h1(x) {
            Ok(v) => values.push(x.sqrt() * v),
            Err(e) => return error_report(anchor, e),
        }
    }
    report(
        anchor,
        values.clone(),
        f64::NAN,
        true,
        false,
        format!(
            "√x h⟨1⟩(x) at x=100,300,1000: {:?} (expected drift toward 1)",
            values.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>()
        ),
    )
}

/// Watson equality: direct kernel application vs the once-integrated kernel
/// with an outer derivative, on three bump functions.
fn c14(s: &SuiteContext) -> VerificationReport {
    let anchor = "identity:watson-equality";
    let tol = s.config.tolerance("watson_equality", 1e-4);
    let omega = if s.config.omega > 1.0 { s.config.omega } else { 1.5 };
    let ctx = match KernelContext::new(omega, 64, 1e-10) {
        Ok(c) => c,
        Err(e) => return error_report(anchor, e),
    };
    let supports = [(1.0, 2.0), (0.8, 1.6), (1.5, 3.0)];
    let mut worst = 0.0f64;
    for &(lo, hi) in &supports {
        let f = bump(lo, hi);
        for &x in &[0.9, 1.5, 2.2] {
            let run = || -> crate::error::Result<f64> {
                let d = watson_direct(&ctx, &f, (lo, hi), x)?;
                let v = watson_via_h1(&ctx, &f, (lo, hi), x, 1e-4)?;
                Ok((d - v).abs() / d.abs().max(0.05))
            };
            match run() {
                Ok(r) => worst = worst.max(r),
                Err(e) => return error_report(anchor, e),
            }
        }
    }
    // isometry sample, reported in the detail (needs the kernel table out to
    // x_max · sup support)
    let f = bump(1.0, 2.0);
    let wide = match KernelContext::with_proxy(omega, 512, 1e-10, 310.0) {
        Ok(c) => c,
        Err(e) => return error_report(anchor, e),
    };
    let defect = operator::isometry_defect(&wide, &f, (1.0, 2.0), 150.0);
    let iso = match defect {
        Ok(d) => format!("isometry defect at X=150: {d:.3e}"),
        Err(e) => format!("isometry defect: error {e}"),
    };
    report(
        anchor,
        vec![worst],
        tol,
        worst < tol,
        true,
        format!("worst two-route mismatch {worst:.3e} over 3 bumps × 3 points; {iso}"),
    )
}
