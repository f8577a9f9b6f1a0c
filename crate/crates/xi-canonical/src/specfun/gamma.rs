//! Complex log-gamma on the principal branch.
//!
//! Lanczos approximation (g = 7, n = 9, Godfrey coefficients) for
//! Re z >= 1/2, reflection through an unwound log-sine otherwise.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const LN_2PI_HALF: f64 = 0.918938533204672741780329736406; // ln(2*pi)/2

fn lanczos_log_gamma(z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        sum += c / (z + i as f64);
    }
    let t = z + (LANCZOS_G - 0.5);
    LN_2PI_HALF + (z - 0.5) * t.ln() - t + sum.ln()
}

/// log(sin(pi z)) unwound so that exp of it equals sin(pi z) and the value
/// is conjugate-symmetric. For Im z >= 0 it uses
/// ln sin(pi z) = -i pi z + ln(1 - e^{2 pi i z}) - ln 2 + i pi/2.
pub(crate) fn log_sin_pi(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return log_sin_pi(z.conj()).conj();
    }
    let i = Complex64::i();
    -i * PI * z + (1.0 - (2.0 * PI * i * z).exp()).ln() - 2.0f64.ln() + i * (PI / 2.0)
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// Principal-branch log Γ(z).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { at: z });
    }
    if z.re >= 0.5 {
        Ok(lanczos_log_gamma(z))
    } else {
        // Γ(z)Γ(1-z) = pi / sin(pi z)
        Ok(PI.ln() - log_sin_pi(z) - lanczos_log_gamma(1.0 - z))
    }
}

/// Γ(z) itself.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// Γ(x) for real x, for callers that stay on the real line.
pub fn gamma_real(x: f64) -> Result<f64> {
    Ok(gamma(Complex64::new(x, 0.0))?.re)
}

/// Bernoulli number B_{2n} for n >= 1. Exact rationals through B_20; beyond
/// that B_{2n} = (-1)^{n+1} 2 (2n)! ζ(2n) / (2π)^{2n}, where the ζ(2n) sum
/// converges to machine precision in a handful of terms.
pub(crate) fn bernoulli_2n(n: usize) -> f64 {
    const SMALL: [f64; 10] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
    ];
    assert!(n >= 1);
    if n <= 10 {
        return SMALL[n - 1];
    }
    let two_n = 2 * n as i32;
    let mut zeta_2n = 1.0;
    for k in 2..40u64 {
        let t = (k as f64).powi(-two_n);
        zeta_2n += t;
        if t < 1e-20 * zeta_2n {
            break;
        }
    }
    let mut fact = 1.0f64;
    for k in 2..=(2 * n) {
        fact *= k as f64;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    sign * 2.0 * fact * zeta_2n / (2.0 * PI).powi(two_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Stirling-series oracle with argument shift, independent of the Lanczos path.
    pub(crate) fn log_gamma_stirling(z: Complex64) -> Complex64 {
        let mut zz = z;
        let mut corr = Complex64::new(0.0, 0.0);
        while zz.re < 20.0 {
            corr += zz.ln();
            zz += 1.0;
        }
        let mut series = Complex64::new(0.0, 0.0);
        let mut zpow = zz; // z^(2n-1)
        for n in 1..=25usize {
            series += bernoulli_2n(n) / ((2 * n) as f64 * (2 * n - 1) as f64) / zpow;
            zpow *= zz * zz;
        }
        (zz - 0.5) * zz.ln() - zz + LN_2PI_HALF + series - corr
    }

    #[test]
    fn gamma_classical_values() {
        let one = log_gamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!(one.norm() < 1e-14);
        let half = log_gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert_relative_eq!(half.re, PI.sqrt().ln(), max_relative = 1e-14);
        assert!(half.im.abs() < 1e-14);
        let five = gamma(Complex64::new(5.0, 0.0)).unwrap();
        assert_relative_eq!(five.re, 24.0, max_relative = 1e-13);
    }

    #[test]
    fn gamma_at_3_plus_4i_matches_stirling_oracle() {
        let z = Complex64::new(3.0, 4.0);
        let got = log_gamma(z).unwrap();
        let oracle = log_gamma_stirling(z);
        // frozen from the Stirling oracle
        let frozen = Complex64::new(-1.7566267846037841, 4.742664438034657);
        assert!((got - oracle).norm() < 1e-12 * (1.0 + oracle.norm()));
        assert!((oracle - frozen).norm() < 1e-12 * (1.0 + frozen.norm()));
    }

    #[test]
    fn reflection_region_agrees_with_recurrence_and_oracle() {
        // Γ(z+1) = z Γ(z) across the reflection boundary, and Stirling on a grid.
        for &(re, im) in &[(-0.3, 0.7), (-2.4, -1.3), (-5.5, 4.0), (0.2, -6.0)] {
            let z = Complex64::new(re, im);
            let lhs = log_gamma(z + 1.0).unwrap().exp();
            let rhs = z * log_gamma(z).unwrap().exp();
            assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
            let got = log_gamma(z).unwrap().exp();
            let oracle = log_gamma_stirling(z).exp();
            assert!((got - oracle).norm() < 1e-12 * oracle.norm());
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for &(re, im) in &[(2.3, 5.0), (-1.2, 2.5), (0.5, 30.0)] {
            let z = Complex64::new(re, im);
            let a = log_gamma(z).unwrap();
            let b = log_gamma(z.conj()).unwrap();
            assert!((a.conj() - b).norm() < 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn pole_errors() {
        for &x in &[0.0, -1.0, -7.0] {
            assert!(matches!(
                log_gamma(Complex64::new(x, 0.0)),
                Err(Error::Pole { .. })
            ));
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_relative_eq!(bernoulli_2n(1), 1.0 / 6.0, max_relative = 1e-14);
        assert_relative_eq!(bernoulli_2n(2), -1.0 / 30.0, max_relative = 1e-14);
        assert_relative_eq!(bernoulli_2n(5), 5.0 / 66.0, max_relative = 1e-14);
        assert_relative_eq!(bernoulli_2n(10), -174611.0 / 330.0, max_relative = 1e-13);
        // the zeta-relation branch
        assert_relative_eq!(bernoulli_2n(11), 854513.0 / 138.0, max_relative = 1e-13);
        assert_relative_eq!(
            bernoulli_2n(12),
            -236364091.0 / 2730.0,
            max_relative = 1e-13
        );
    }
}
