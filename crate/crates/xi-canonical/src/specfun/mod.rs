//! Complex special functions: ξ(s), the structure function Θ_ω, and the
//! real pair (A^ω, B^ω), with two independent evaluation routes for ξ used
//! as mutual oracles.
//!
//! Conventions: s = 1/2 − iz throughout;
//! ξ(s) = ½ s(s−1) π^{−s/2} Γ(s/2) ζ(s) = π^{−s/2} Γ(s/2+1) (s−1)ζ(s);
//! Θ_ω(z) = ξ(½−ω−iz) / ξ(½+ω−iz);
//! A^ω(z) = ½(ξ(s+ω)+ξ(s−ω)), B^ω(z) = (i/2)(ξ(s+ω)−ξ(s−ω)).

mod gamma;
mod theta_series;
mod zeta;

pub use gamma::{gamma, gamma_real, log_gamma};
pub use theta_series::phi;
pub use zeta::{zeta, zeta_sm1, zeta_with, ZetaParams};

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Tunable evaluation parameters for ξ and its oracle route.
#[derive(Debug, Clone, Copy)]
pub struct XiEvaluator {
    /// Leading Euler–Maclaurin terms for ζ.
    pub euler_maclaurin_terms: usize,
    /// Bernoulli corrections through B_{2K}.
    pub bernoulli_order: usize,
    /// Series cutoff for the theta-series kernel φ(x).
    pub theta_series_cutoff: usize,
}

impl Default for XiEvaluator {
    fn default() -> Self {
        XiEvaluator {
            euler_maclaurin_terms: 40,
            bernoulli_order: 10,
            theta_series_cutoff: 8,
        }
    }
}

impl XiEvaluator {
    pub fn new(euler_maclaurin_terms: usize, bernoulli_order: usize, theta_series_cutoff: usize) -> Self {
        assert!(theta_series_cutoff >= 1);
        XiEvaluator {
            euler_maclaurin_terms,
            bernoulli_order,
            theta_series_cutoff,
        }
    }

    fn zeta_params(&self) -> ZetaParams {
        ZetaParams {
            leading_terms: self.euler_maclaurin_terms,
            bernoulli_order: self.bernoulli_order,
        }
    }

    pub fn zeta(&self, s: Complex64) -> Result<Complex64> {
        zeta::zeta_with(s, self.zeta_params())
    }

    /// Completed zeta ξ(s); entire.
    ///
    /// For Re s >= −1 this is π^{−s/2} Γ(s/2+1) (s−1)ζ(s); further left the
    /// ζ reflection and Γ(s/2+1) sin(πs/2) = (πs/2)/Γ(1−s/2) are combined
    /// analytically so that trivial zeros and Γ poles never meet numerically:
    /// ξ(s) = ½ s(s−1) 2^s π^{s/2} Γ(1−s) ζ(1−s) / Γ(1−s/2).
    pub fn xi(&self, s: Complex64) -> Result<Complex64> {
        let p = self.zeta_params();
        if s.re >= -1.0 {
            let log_pref = -(s / 2.0) * PI.ln() + log_gamma(s / 2.0 + 1.0)?;
            Ok(log_pref.exp() * zeta::zeta_sm1_with(s, p)?)
        } else {
            let log_pref = s * 2.0f64.ln() + (s / 2.0) * PI.ln() + log_gamma(1.0 - s)?
                - log_gamma(1.0 - s / 2.0)?;
            Ok(0.5 * s * (s - 1.0) * log_pref.exp() * zeta::zeta_with(1.0 - s, p)?)
        }
    }

    /// ξ(s) through the folded theta-series integral; the independent oracle.
    pub fn xi_theta_series(&self, s: Complex64) -> Complex64 {
        theta_series::xi_theta_series(s, self.theta_series_cutoff)
    }

    /// Θ_ω(z) = ξ(½−ω−iz)/ξ(½+ω−iz).
    pub fn theta_omega(&self, z: Complex64, omega: f64) -> Result<Complex64> {
        assert!(omega > 0.0);
        let s = Complex64::new(0.5, 0.0) - Complex64::i() * z;
        let den_arg = s + omega;
        let den = self.xi(den_arg)?;
        if den.norm() < 1e-14 * (1.0 + den_arg.norm()) {
            return Err(Error::Pole { at: z });
        }
        Ok(self.xi(s - omega)? / den)
    }

    /// The real pair (A^ω(z), B^ω(z)).
    pub fn ab_omega(&self, z: Complex64, omega: f64) -> Result<(Complex64, Complex64)> {
        let s = Complex64::new(0.5, 0.0) - Complex64::i() * z;
        let plus = self.xi(s + omega)?;
        let minus = self.xi(s - omega)?;
        let a = 0.5 * (plus + minus);
        let b = 0.5 * Complex64::i() * (plus - minus);
        Ok((a, b))
    }
}

/// ξ(s) at default parameters.
pub fn xi(s: Complex64) -> Result<Complex64> {
    XiEvaluator::default().xi(s)
}

/// Theta-series route to ξ(s) at default parameters.
pub fn xi_theta_series(s: Complex64) -> Complex64 {
    XiEvaluator::default().xi_theta_series(s)
}

/// Θ_ω(z) at default parameters.
pub fn theta_omega(z: Complex64, omega: f64) -> Result<Complex64> {
    XiEvaluator::default().theta_omega(z, omega)
}

/// (A^ω(z), B^ω(z)) at default parameters.
pub fn ab_omega(z: Complex64, omega: f64) -> Result<(Complex64, Complex64)> {
    XiEvaluator::default().ab_omega(z, omega)
}

/// A^ω(z) alone.
pub fn a_omega(z: Complex64, omega: f64) -> Result<Complex64> {
    Ok(ab_omega(z, omega)?.0)
}

/// B^ω(z) alone.
pub fn b_omega(z: Complex64, omega: f64) -> Result<Complex64> {
    Ok(ab_omega(z, omega)?.1)
}
