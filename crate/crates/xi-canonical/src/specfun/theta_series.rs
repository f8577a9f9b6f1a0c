//! Theta-series integral route to ξ(s), used as an oracle against the
//! product formula.
//!
//! With φ(x) = 2 Σ_{n≥1} (2π²n⁴x⁴ − 3πn²x²) e^{−πn²x²} one has
//! ξ(s) = ∫₀^∞ φ(x) x^s dx/x, and φ(1/x) = x φ(x) folds the integral to
//! ξ(s) = ∫₁^∞ φ(x) (x^s + x^{1-s}) dx/x, which is manifestly symmetric
//! under s ↦ 1−s.

use crate::quad::{uniform_breaks, CompositeRule};
use num_complex::Complex64;
use std::f64::consts::PI;

/// φ(x), truncating the series at `cutoff` terms (with early exit once the
/// Gaussian factor underflows).
pub fn phi(x: f64, cutoff: usize) -> f64 {
    let mut sum = 0.0;
    for n in 1..=cutoff {
        let nf = n as f64;
        let q = PI * nf * nf * x * x;
        if q > 700.0 {
            break;
        }
        sum += (2.0 * q * q - 3.0 * q) * (-q).exp();
    }
    2.0 * sum
}

/// ξ(s) by quadrature of the folded theta-series integral.
pub fn xi_theta_series(s: Complex64, cutoff: usize) -> Complex64 {
    // integrand decays like e^{-pi x^2}; [1, 6.5] reaches ~1e-58
    let x_max = 6.5f64;
    let osc = s.im.abs().max((1.0 - s).im.abs());
    let panels = 16 + (osc * x_max.ln() / 2.0).ceil() as usize;
    let rule = CompositeRule::on_breaks(&uniform_breaks(1.0, x_max, panels), 20);
    rule.integrate_complex(|x| {
        let lx = x.ln();
        let p = phi(x, cutoff);
        ((s * lx).exp() + ((1.0 - s) * lx).exp()) * (p / x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_satisfies_modular_relation() {
        // φ(1/x) = x φ(x)
        for &x in &[1.0f64, 1.3, 2.0, 0.8] {
            let lhs = phi(1.0 / x, 16);
            let rhs = x * phi(x, 16);
            assert!(
                (lhs - rhs).abs() < 1e-12 * (1.0 + rhs.abs()),
                "x={x}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn xi_trivial_points() {
        // ξ(0) = ξ(1) = 1/2
        let at0 = xi_theta_series(Complex64::new(0.0, 0.0), 8);
        let at1 = xi_theta_series(Complex64::new(1.0, 0.0), 8);
        assert!((at0.re - 0.5).abs() < 1e-12 && at0.im.abs() < 1e-14);
        assert!((at1 - at0).norm() < 1e-13);
    }
}
