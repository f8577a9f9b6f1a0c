//! Direct Mellin route to (A_a, B_a): closed forms for a <= 1 and the tail
//! integrals over the marched boundary profiles for a > 1. Needs Im z above
//! ω + 1/2 so the tails converge absolutely.

use super::{CanonicalState, MCurve};
use crate::error::{Error, Result};
use crate::operator::PhiProfile;
use crate::specfun;
use num_complex::Complex64;

/// Closed form below the support threshold:
/// Ã_a = (a^{iz} + Θ_ω(z) a^{-iz})/2, B̃_a = i(a^{iz} − Θ_ω(z) a^{-iz})/2,
/// A = ξ(1/2+ω−iz) Ã, B = ξ(1/2+ω−iz) B̃ (m ≡ 1 here).
pub fn ab_below_one(omega: f64, a: f64, z: Complex64) -> Result<CanonicalState> {
    assert!(a > 0.0 && a <= 1.0);
    let i = Complex64::i();
    let theta = specfun::theta_omega(z, omega)?;
    let up = (i * z * a.ln()).exp();
    let dn = (-i * z * a.ln()).exp();
    let a_tilde = 0.5 * (up + theta * dn);
    let b_tilde = 0.5 * i * (up - theta * dn);
    let s = Complex64::new(0.5, 0.0) - i * z;
    let xi_plus = specfun::xi(s + omega)?;
    Ok(CanonicalState {
        z,
        a,
        a_big: xi_plus * a_tilde,
        b_big: xi_plus * b_tilde,
        psi_plus: xi_plus * a_tilde,
        psi_minus: xi_plus * b_tilde,
    })
}

/// Tail integral ∫_a^X φ^ε(x) x^{1/2+iz} dx/x over a marched profile, by
/// composite Simpson on the uniform η-grid (x = e^{η-ln a}).
fn tail_integral(profile: &PhiProfile, eps: f64, z: Complex64, x_max: f64) -> Complex64 {
    let alpha = profile.a.ln();
    let s = Complex64::new(0.5, 0.0) + Complex64::i() * z;
    let eta_lo = 2.0 * alpha; // x = a
    let eta_hi = (x_max.ln() + alpha).min(*profile.eta.last().unwrap());
    let d = profile.eta[1] - profile.eta[0];
    let i_lo = (eta_lo / d).ceil() as usize;
    let i_hi = ((eta_hi / d).floor() as usize).min(profile.eta.len() - 1);
    let value_at = |i: usize| -> Complex64 {
        let eta = profile.eta[i];
        let phi = 0.5 * (profile.u[i] + eps * profile.v[i]);
        (s * (eta - alpha)).exp() * phi
    };
    // partial head [eta_lo, i_lo*d] by trapezoid on the exact endpoints
    let mut acc = Complex64::new(0.0, 0.0);
    if i_lo >= 1 && eta_lo < profile.eta[i_lo] {
        let phi_lo = 0.5
            * (interp(&profile.eta, &profile.u, eta_lo)
                + eps * interp(&profile.eta, &profile.v, eta_lo));
        let f_lo = (s * (eta_lo - alpha)).exp() * phi_lo;
        acc += 0.5 * (f_lo + value_at(i_lo)) * (profile.eta[i_lo] - eta_lo);
    }
    // composite Simpson over pairs of cells
    let mut i = i_lo;
    while i + 2 <= i_hi {
        acc += d / 3.0 * (value_at(i) + 4.0 * value_at(i + 1) + value_at(i + 2));
        i += 2;
    }
    if i + 1 <= i_hi {
        acc += 0.5 * d * (value_at(i) + value_at(i + 1));
    }
    acc
}

fn interp(eta: &[f64], f: &[f64], x: f64) -> f64 {
    let d = eta[1] - eta[0];
    let pos = (x - eta[0]) / d;
    let i = (pos.floor() as usize).clamp(0, eta.len() - 2);
    let t = pos - i as f64;
    f[i] * (1.0 - t) + f[i + 1] * t
}

/// (A_a, B_a) for a > 1 from the profile snapshot:
/// Ã = a^{iz}/2 + (√a/2) ∫_a^∞ φ⁺ x^{1/2+iz} dx/x,
/// B̃ = i [ a^{iz}/2 − (√a/2) ∫_a^∞ φ⁻ x^{1/2+iz} dx/x ],
/// A = m ξ(1/2+ω−iz) Ã, B = ξ(1/2+ω−iz) B̃ / m.
pub fn direct_ab(
    curve: &MCurve,
    a: f64,
    z: Complex64,
    x_max: f64,
    tail_tol: f64,
) -> Result<CanonicalState> {
    let omega = curve.omega;
    if a <= 1.0 {
        return ab_below_one(omega, a, z);
    }
    if z.im <= omega + 0.5 {
        return Err(Error::Convergence {
            bound: f64::INFINITY,
            tol: 0.0,
        });
    }
    let profile = curve.profile_at(a).ok_or_else(|| {
        Error::Domain(format!("no boundary profile snapshot near a = {a}"))
    })?;
    // crude tail certificate: |φ| <= C x^{ω} with C fitted near the cut
    let alpha = profile.a.ln();
    let mut c_fit = 0.0f64;
    let d = profile.eta[1] - profile.eta[0];
    let n = profile.eta.len();
    for i in (n - n / 8)..n {
        let x = (profile.eta[i] - alpha).exp();
        let phi = 0.5 * (profile.u[i].abs() + profile.v[i].abs());
        c_fit = c_fit.max(phi / x.powf(omega));
    }
    let _ = d;
    let decay = omega + 0.5 - z.im;
    let tail_bound = c_fit * x_max.powf(decay) / (-decay);
    if tail_bound > tail_tol {
        return Err(Error::Convergence {
            bound: tail_bound,
            tol: tail_tol,
        });
    }
    let i = Complex64::i();
    let up = (i * z * a.ln()).exp();
    let ra = a.sqrt();
    let t_plus = tail_integral(profile, 1.0, z, x_max);
    let t_minus = tail_integral(profile, -1.0, z, x_max);
    let a_tilde = 0.5 * up + 0.5 * ra * t_plus;
    let b_tilde = i * (0.5 * up - 0.5 * ra * t_minus);
    let s = Complex64::new(0.5, 0.0) - i * z;
    let xi_plus = specfun::xi(s + omega)?;
    let m = curve.m(a);
    Ok(CanonicalState {
        z,
        a,
        a_big: m * xi_plus * a_tilde,
        b_big: xi_plus * b_tilde / m,
        psi_plus: xi_plus * a_tilde,
        psi_minus: xi_plus * b_tilde,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{evolve, m_curve, MCurveSpec, StepControl};
    use crate::kernel::KernelContext;

    #[test]
    fn below_one_matches_ab_at_one() {
        // a → 1: the closed form reduces to (A^ω, B^ω)
        let omega = 1.5;
        for &(re, im) in &[(2.0, 0.0), (0.5, 3.7)] {
            let z = Complex64::new(re, im);
            let s = ab_below_one(omega, 1.0, z).unwrap();
            let (a0, b0) = specfun::ab_omega(z, omega).unwrap();
            assert!((s.a_big - a0).norm() < 1e-10 * (1.0 + a0.norm()), "A at z={z}");
            assert!((s.b_big - b0).norm() < 1e-10 * (1.0 + b0.norm()), "B at z={z}");
        }
    }

    #[test]
    fn below_one_parity() {
        let omega = 1.5;
        let z = Complex64::new(1.3, 0.8);
        let sp = ab_below_one(omega, 0.5, z).unwrap();
        let sm = ab_below_one(omega, 0.5, -z).unwrap();
        let scale = sp.a_big.norm() + sp.b_big.norm();
        assert!((sp.a_big - sm.a_big).norm() < 1e-9 * scale);
        assert!((sp.b_big + sm.b_big).norm() < 1e-9 * scale);
    }

    #[test]
    fn ode_and_direct_route_agree() {
        // a light march; the acceptance suite runs the full-resolution one
        // at the 1e-3 tolerance
        let ctx = KernelContext::new(1.5, 512, 1e-10).unwrap();
        let spec = MCurveSpec {
            steps_per_unit: 8000,
            eta_max: 5.0,
            det_sample_step: 0.5,
        };
        let curve = m_curve(&ctx, 1.55, spec, &[1.5]).unwrap();
        let z = Complex64::new(0.7, 3.5); // Im z = ω + 2
        let a_snap = curve.profiles[0].a;
        let ode = evolve(&curve, z, a_snap, StepControl::default()).unwrap();
        let direct = direct_ab(&curve, a_snap, z, 90.0, 1e-3).unwrap();
        let scale = ode.a_big.norm() + ode.b_big.norm();
        assert!(
            (ode.a_big - direct.a_big).norm() < 2e-2 * scale,
            "A: ode {} vs direct {}",
            ode.a_big,
            direct.a_big
        );
        assert!(
            (ode.b_big - direct.b_big).norm() < 2e-2 * scale,
            "B: ode {} vs direct {}",
            ode.b_big,
            direct.b_big
        );
    }
}
