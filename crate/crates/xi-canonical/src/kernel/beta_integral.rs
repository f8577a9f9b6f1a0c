//! The tail beta integral β(z; p, q) = ∫_z^1 t^{p-1} (1-t)^{q-1} dt for
//! 0 < z < 1, q > 0 and arbitrary real p (including p <= 0, where the
//! complete beta function does not exist but the tail integral does).
//!
//! Two independent routes:
//! - a pair of power series around t = 1 and t = 0 with geometric tails,
//!   used in production (a few hundred flops per call);
//! - singularity-aware quadrature ([`BetaIntegralSpec`]), split at the
//!   midpoint with a log substitution on the left piece and panels graded
//!   toward the t = 1 singularity on the right piece, kept as the
//!   cross-check oracle.

use crate::error::{Error, Result};
use crate::quad::{graded_breaks, uniform_breaks, CompositeRule};

const SPLIT: f64 = 0.4;
const MAX_TERMS: usize = 400;

/// Series route. Relative accuracy ~1e-14 away from extreme parameters.
pub fn beta_tail(z: f64, p: f64, q: f64) -> Result<f64> {
    if !(q > 0.0) {
        return Err(Error::Domain(format!("beta tail needs q > 0, got q = {q}")));
    }
    if !(z > 0.0) {
        return Err(Error::Domain(format!("beta tail needs z > 0, got z = {z}")));
    }
    if z >= 1.0 {
        return Ok(0.0);
    }
    if z >= SPLIT {
        beta_tail_w(1.0 - z, p, q)
    } else {
        Ok(series_from_zero_segment(z, SPLIT, p, q) + beta_tail_w(1.0 - SPLIT, p, q)?)
    }
}

/// Same integral parametrized by the distance w = 1 - z from the right
/// endpoint, for callers that know w exactly:
/// ∫_{1-w}^1 t^{p-1}(1-t)^{q-1} dt = Σ_k (1-p)_k / (k! (q+k)) · w^{q+k}.
pub(crate) fn beta_tail_w(w: f64, p: f64, q: f64) -> Result<f64> {
    let mut poch = 1.0f64; // (1-p)_k
    let mut wpow = w.powf(q); // w^{q+k}
    let mut sum = 0.0f64;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let term = poch * wpow / (q + kf);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) && k > 3 {
            return Ok(sum);
        }
        poch *= (1.0 - p + kf) / (kf + 1.0);
        wpow *= w;
    }
    Err(Error::Convergence {
        bound: (poch * wpow).abs(),
        tol: 1e-17 * sum.abs(),
    })
}

/// ∫_z^{z1} t^{p-1}(1-t)^{q-1} dt by expanding (1-t)^{q-1} = Σ_j (1-q)_j/j! t^j.
/// The j-th primitive is (z1^{p+j} - z^{p+j})/(p+j), or ln(z1/z) when p+j = 0.
/// Exact termination when q is a positive integer.
fn series_from_zero_segment(z: f64, z1: f64, p: f64, q: f64) -> f64 {
    let mut poch = 1.0f64; // (1-q)_j / j!
    let mut sum = 0.0f64;
    let mut z1p = z1.powf(p);
    let mut zp = z.powf(p);
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        let e = p + jf;
        let integral = if e.abs() < 1e-12 {
            (z1 / z).ln()
        } else {
            (z1p - zp) / e
        };
        let term = poch * integral;
        sum += term;
        poch *= (1.0 - q + jf) / (jf + 1.0);
        if poch == 0.0 {
            break; // q a positive integer: finite expansion
        }
        z1p *= z1;
        zp *= z;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) && j > 6 {
            break;
        }
    }
    sum
}

/// The quadrature route: evaluation plan for one tail beta integral.
#[derive(Debug, Clone, Copy)]
pub struct BetaIntegralSpec {
    /// Lower limit, in (0, 1).
    pub z: f64,
    /// Power exponent p (may be <= 0).
    pub p: f64,
    /// Weight exponent q (must be > 0).
    pub q: f64,
    /// Gauss nodes per panel.
    pub panels: usize,
}

impl BetaIntegralSpec {
    pub fn new(z: f64, p: f64, q: f64) -> Self {
        BetaIntegralSpec { z, p, q, panels: 16 }
    }

    /// Split at the midpoint m = (1+z)/2. Left piece in v = ln t (handles the
    /// steep t^{p-1} for p <= 0 and tiny z); right piece in the distance
    /// variable u = 1-t with panels graded toward u = 0, which resolves the
    /// (1-t)^{q-1} endpoint singularity without cancellation.
    pub fn evaluate(&self) -> Result<f64> {
        let (z, p, q) = (self.z, self.p, self.q);
        if !(q > 0.0) || !(z > 0.0) {
            return Err(Error::Domain(format!(
                "beta quadrature needs q > 0 and z > 0, got q = {q}, z = {z}"
            )));
        }
        if z >= 1.0 {
            return Ok(0.0);
        }
        let m = 0.5 * (1.0 + z);

        // left: ∫_z^m t^{p-1}(1-t)^{q-1} dt with t = e^v
        let (lo, hi) = (z.ln(), m.ln());
        let n_panels = (((hi - lo) * (1.0 + p.abs()) / 1.2).ceil() as usize).max(2);
        let left_rule = CompositeRule::on_breaks(&uniform_breaks(lo, hi, n_panels), self.panels);
        let left = left_rule.integrate(|v| {
            let t = v.exp();
            (p * v).exp() * (1.0 - t).powf(q - 1.0)
        });

        // right: ∫_0^{1-m} (1-u)^{p-1} u^{q-1} du, graded toward u = 0
        let breaks = graded_breaks(0.0, 1.0 - m, true, 0.3, 1e-26);
        let right_rule = CompositeRule::on_breaks(&breaks, self.panels);
        let right = right_rule.integrate(|u| (1.0 - u).powf(p - 1.0) * u.powf(q - 1.0));

        Ok(left + right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn both(z: f64, p: f64, q: f64) -> (f64, f64) {
        (
            beta_tail(z, p, q).unwrap(),
            BetaIntegralSpec::new(z, p, q).evaluate().unwrap(),
        )
    }

    #[test]
    fn closed_forms_with_positive_p() {
        // q = 1: ∫_z^1 t^{p-1} dt = (1 - z^p)/p
        for &(z, p) in &[(0.3f64, 2.5f64), (0.7, 0.8), (0.05, 1.0)] {
            let exact = (1.0 - z.powf(p)) / p;
            let (s, quad) = both(z, p, 1.0);
            assert_relative_eq!(s, exact, max_relative = 1e-13);
            assert_relative_eq!(quad, exact, max_relative = 1e-11);
        }
        // p = 1: ∫_z^1 (1-t)^{q-1} dt = (1-z)^q / q
        for &(z, q) in &[(0.2f64, 0.6f64), (0.9, 1.5), (0.45, 3.0)] {
            let exact = (1.0 - z).powf(q) / q;
            let (s, quad) = both(z, 1.0, q);
            assert_relative_eq!(s, exact, max_relative = 1e-13);
            assert_relative_eq!(quad, exact, max_relative = 1e-11);
        }
    }

    #[test]
    fn negative_p_closed_form() {
        // p = -1/2, q = 2: ∫ t^{-3/2}(1-t) dt = [-2 t^{-1/2} - 2 t^{1/2}]
        let f = |t: f64| -2.0 / t.sqrt() - 2.0 * t.sqrt();
        for &z in &[0.9, 0.5, 0.1, 1e-4] {
            let exact = f(1.0) - f(z);
            let (s, quad) = both(z, -0.5, 2.0);
            assert_relative_eq!(s, exact, max_relative = 1e-12);
            assert_relative_eq!(quad, exact, max_relative = 1e-10);
        }
    }

    #[test]
    fn log_case_p_zero() {
        // p = 0, q = 1: ∫_z^1 dt/t = -ln z
        for &z in &[0.8, 0.3, 1e-3] {
            let (s, quad) = both(z, 0.0, 1.0);
            assert_relative_eq!(s, -z.ln(), max_relative = 1e-13);
            assert_relative_eq!(quad, -z.ln(), max_relative = 1e-11);
        }
    }

    #[test]
    fn upward_recurrence_property() {
        // β(z;p,q) = ((p+q)/p) β(z;p+1,q) - z^p (1-z)^q / p
        for &(z, p, q) in &[
            (0.3, -1.5, 0.75),
            (0.6, -0.25, 1.5),
            (0.05, -2.0, 2.0),
            (0.85, 0.5, 0.55),
        ] {
            let lhs = beta_tail(z, p, q).unwrap();
            let rhs = (p + q) / p * beta_tail(z, p + 1.0, q).unwrap()
                - z.powf(p) * (1.0 - z).powf(q) / p;
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        }
    }

    #[test]
    fn series_matches_quadrature_on_stress_grid() {
        let mut worst = 0.0f64;
        for &p in &[-2.5, -1.0, -0.5, 0.0, 0.25, 1.3] {
            for &q in &[0.55, 0.75, 1.0, 1.5, 2.0, 2.5] {
                for &z in &[1e-5, 1e-3, 0.05, 0.25, 0.399, 0.401, 0.7, 0.99] {
                    let (s, quad) = both(z, p, q);
                    let scale = s.abs().max(1e-12);
                    worst = worst.max((s - quad).abs() / scale);
                }
            }
        }
        assert!(worst < 2e-10, "series vs quadrature worst {worst:.3e}");
    }

    proptest! {
        #[test]
        fn series_vs_quadrature_randomized(
            z in 1e-4f64..0.999,
            p in -3.0f64..2.0,
            q in 0.55f64..3.0,
        ) {
            let s = beta_tail(z, p, q).unwrap();
            let quad = BetaIntegralSpec::new(z, p, q).evaluate().unwrap();
            let scale = s.abs().max(1e-10);
            prop_assert!((s - quad).abs() / scale < 1e-9,
                "z={z} p={p} q={q}: series {s} quad {quad}");
        }
    }
}
