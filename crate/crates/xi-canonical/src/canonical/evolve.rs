//! Evolution of (A_a(z), B_a(z)) in a at fixed z.
//!
//! The canonical system -a ∂_a (X, Y) = z J diag(m⁻², m²) (X, Y) is solved
//! in the balanced variables ψ⁺ = A/m, ψ⁻ = mB, which satisfy
//!     a ψ⁺' = -μ(a) ψ⁺ + z ψ⁻,
//!     a ψ⁻' =  μ(a) ψ⁻ - z ψ⁺,
//! so the exponential factors m^{±1} never enter the right-hand side. A and
//! B are reassembled at readout. Steps are capped at the √n kink points of
//! μ, and the error control is classical RK4 step-doubling.

use super::MCurve;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// The pair (A_a(z), B_a(z)) at one (a, z).
#[derive(Debug, Clone, Copy)]
pub struct CanonicalState {
    pub z: Complex64,
    pub a: f64,
    pub a_big: Complex64,
    pub b_big: Complex64,
    /// Balanced components ψ⁺ = A/m, ψ⁻ = m B.
    pub psi_plus: Complex64,
    pub psi_minus: Complex64,
}

/// Adaptive step parameters.
#[derive(Debug, Clone, Copy)]
pub struct StepControl {
    /// Target local error per unit a.
    pub tol: f64,
    pub h_init: f64,
    pub h_min: f64,
}

impl Default for StepControl {
    fn default() -> Self {
        StepControl {
            tol: 1e-8,
            h_init: 1e-3,
            h_min: 1e-7,
        }
    }
}

#[derive(Clone, Copy)]
struct Psi {
    plus: Complex64,
    minus: Complex64,
}

fn rhs(curve: &MCurve, z: Complex64, a: f64, y: Psi) -> Psi {
    let mu = curve.mu(a);
    Psi {
        plus: (-mu * y.plus + z * y.minus) / a,
        minus: (mu * y.minus - z * y.plus) / a,
    }
}

fn rk4(curve: &MCurve, z: Complex64, a: f64, h: f64, y: Psi) -> Psi {
    let k1 = rhs(curve, z, a, y);
    let y2 = Psi {
        plus: y.plus + 0.5 * h * k1.plus,
        minus: y.minus + 0.5 * h * k1.minus,
    };
    let k2 = rhs(curve, z, a + 0.5 * h, y2);
    let y3 = Psi {
        plus: y.plus + 0.5 * h * k2.plus,
        minus: y.minus + 0.5 * h * k2.minus,
    };
    let k3 = rhs(curve, z, a + 0.5 * h, y3);
    let y4 = Psi {
        plus: y.plus + h * k3.plus,
        minus: y.minus + h * k3.minus,
    };
    let k4 = rhs(curve, z, a + h, y4);
    Psi {
        plus: y.plus + h / 6.0 * (k1.plus + 2.0 * k2.plus + 2.0 * k3.plus + k4.plus),
        minus: y.minus + h / 6.0 * (k1.minus + 2.0 * k2.minus + 2.0 * k3.minus + k4.minus),
    }
}

/// Mandatory step boundaries: the √n kink points of μ inside (lo, hi).
fn kink_points(lo: f64, hi: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut n = (lo * lo).floor().max(1.0) as usize;
    loop {
        let r = (n as f64).sqrt();
        if r >= hi {
            break;
        }
        if r > lo {
            out.push(r);
        }
        n += 1;
    }
    out
}

/// Evolve from a = 1 (initial data (A^ω, B^ω), m = 1) to `a_target` within
/// the curve's range, returning the state there.
pub fn evolve(
    curve: &MCurve,
    z: Complex64,
    a_target: f64,
    control: StepControl,
) -> Result<CanonicalState> {
    let omega = curve.omega;
    let (a0, b0) = crate::specfun::ab_omega(z, omega)?;
    evolve_from(curve, z, 1.0, a_target, Psi { plus: a0, minus: b0 }, control)
}

fn evolve_from(
    curve: &MCurve,
    z: Complex64,
    a_start: f64,
    a_target: f64,
    mut y: Psi,
    control: StepControl,
) -> Result<CanonicalState> {
    if a_target > curve.a_max + 1e-12 {
        return Err(Error::Domain(format!(
            "target a = {a_target} beyond the curve range {}",
            curve.a_max
        )));
    }
    if a_target < a_start {
        return Err(Error::Domain(format!(
            "backward evolution {a_start} -> {a_target} not supported; use the closed form below a = 1"
        )));
    }
    // segment the interval at the √n kinks
    let mut marks = kink_points(a_start, a_target);
    marks.push(a_target);
    let mut a = a_start;
    for &stop in &marks {
        let mut h = control.h_init.min(stop - a);
        while a < stop - 1e-14 {
            h = h.min(stop - a).max(control.h_min);
            let full = rk4(curve, z, a, h, y);
            let half = rk4(curve, z, a, 0.5 * h, y);
            let two = rk4(curve, z, a + 0.5 * h, 0.5 * h, half);
            let err = ((full.plus - two.plus).norm() + (full.minus - two.minus).norm())
                / (1.0 + y.plus.norm() + y.minus.norm());
            // absolute floor keeps the controller from stalling where the
            // sampled μ is only Hölder-smooth (a → 1⁺ and the √n kinks)
            let allowed = control.tol * h + 1e-13;
            if err <= allowed || h <= control.h_min * 2.0 {
                // accept the doubled-step solution (one order better)
                y = Psi {
                    plus: two.plus + (two.plus - full.plus) / 15.0,
                    minus: two.minus + (two.minus - full.minus) / 15.0,
                };
                a += h;
                if err < 0.01 * allowed {
                    h *= 2.0;
                }
            } else {
                h *= 0.5;
            }
        }
        a = stop;
    }
    let m = curve.m(a_target);
    Ok(CanonicalState {
        z,
        a: a_target,
        a_big: m * y.plus,
        b_big: y.minus / m,
        psi_plus: y.plus,
        psi_minus: y.minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{m_curve, MCurveSpec};
    use crate::kernel::KernelContext;

    fn small_curve() -> MCurve {
        let ctx = KernelContext::new(1.5, 512, 1e-10).unwrap();
        let spec = MCurveSpec {
            steps_per_unit: 2000,
            eta_max: 3.0,
            det_sample_step: 0.25,
        };
        m_curve(&ctx, 1.5, spec, &[]).unwrap()
    }

    #[test]
    fn z_zero_state_is_constant() {
        // the right-hand side scales with z, so (A, B) stays at its initial
        // value even though m(a) moves
        let curve = small_curve();
        let z = Complex64::new(0.0, 0.0);
        let s = evolve(&curve, z, 1.4, StepControl::default()).unwrap();
        let (a0, b0) = crate::specfun::ab_omega(z, 1.5).unwrap();
        // the ODE's internal ∫μ and the curve's Simpson log m are separate
        // quadratures of the same data, so constancy holds to their mutual
        // consistency, not machine precision
        assert!((s.a_big - a0).norm() < 1e-5 * a0.norm(), "A moved: {} vs {}", s.a_big, a0);
        assert!((s.b_big - b0).norm() < 1e-5 * (1.0 + b0.norm()));
    }

    #[test]
    fn parity_under_z_reflection() {
        let curve = small_curve();
        for &(re, im) in &[(2.0, 0.0), (1.0, 1.5), (4.0, -0.5)] {
            let z = Complex64::new(re, im);
            let s = evolve(&curve, z, 1.45, StepControl::default()).unwrap();
            let sm = evolve(&curve, -z, 1.45, StepControl::default()).unwrap();
            let scale = s.a_big.norm() + s.b_big.norm();
            assert!(
                (s.a_big - sm.a_big).norm() < 1e-6 * scale,
                "A parity at z={z}"
            );
            assert!(
                (s.b_big + sm.b_big).norm() < 1e-6 * scale,
                "B parity at z={z}"
            );
        }
    }

    #[test]
    fn realness_on_real_z() {
        let curve = small_curve();
        let z = Complex64::new(3.0, 0.0);
        let s = evolve(&curve, z, 1.5, StepControl::default()).unwrap();
        assert!(s.a_big.im.abs() < 1e-8 * s.a_big.norm());
        assert!(s.b_big.im.abs() < 1e-8 * s.b_big.norm());
    }
}
