//! Real zeros of A^ω and B^ω: sign-change bracketing plus bisection on the
//! real line, cross-checked by an argument-principle contour count.

use crate::error::{Error, Result};
use crate::specfun;
use num_complex::Complex64;

fn real_a(omega: f64, t: f64) -> Result<f64> {
    Ok(specfun::ab_omega(Complex64::new(t, 0.0), omega)?.0.re)
}

fn real_b(omega: f64, t: f64) -> Result<f64> {
    Ok(specfun::ab_omega(Complex64::new(t, 0.0), omega)?.1.re)
}

fn bracket_zeros(
    f: &dyn Fn(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    scan_step: f64,
) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let mut t = lo;
    let mut prev = f(t)?;
    while t < hi {
        let t_next = (t + scan_step).min(hi);
        let next = f(t_next)?;
        if prev == 0.0 {
            out.push(t);
        } else if prev * next < 0.0 {
            // bisection
            let (mut a, mut b) = (t, t_next);
            let mut fa = prev;
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                let fm = f(mid)?;
                if fm == 0.0 || (b - a) < 1e-13 * (1.0 + mid.abs()) {
                    a = mid;
                    break;
                }
                if fa * fm < 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            out.push(0.5 * (a + b));
        }
        t = t_next;
        prev = next;
    }
    Ok(out)
}

/// Real zeros of A^ω on [0, t_max].
pub fn zeros_of_a(omega: f64, t_max: f64) -> Result<Vec<f64>> {
    bracket_zeros(&|t| real_a(omega, t), 0.0, t_max, 0.05)
}

/// Real zeros of B^ω on (0, t_max] (the automatic zero at 0 is excluded).
pub fn zeros_of_b(omega: f64, t_max: f64) -> Result<Vec<f64>> {
    let z = bracket_zeros(&|t| real_b(omega, t), 1e-4, t_max, 0.05)?;
    Ok(z)
}

/// Argument-principle count of zeros of A^ω inside the rectangle
/// [0, t_max] × [-height, height], by quadrature of A'/A along the contour.
/// The derivative uses a 4th-order central stencil in the complex plane.
pub fn count_zeros_contour(omega: f64, t_max: f64, height: f64) -> Result<usize> {
    let a_fn = |z: Complex64| -> Result<Complex64> { Ok(specfun::ab_omega(z, omega)?.0) };
    let d_fn = |z: Complex64| -> Result<Complex64> {
        let h = 1e-3;
        let f1 = a_fn(z + Complex64::new(h, 0.0))?;
        let f_1 = a_fn(z - Complex64::new(h, 0.0))?;
        let f2 = a_fn(z + Complex64::new(2.0 * h, 0.0))?;
        let f_2 = a_fn(z - Complex64::new(2.0 * h, 0.0))?;
        Ok((8.0 * (f1 - f_1) - (f2 - f_2)) / (12.0 * h))
    };
    // nudge vertical edges off potential zeros at the window ends
    let x0 = -0.25;
    let x1 = t_max + 0.25;
    let corners = [
        Complex64::new(x0, -height),
        Complex64::new(x1, -height),
        Complex64::new(x1, height),
        Complex64::new(x0, height),
    ];
    let gl = crate::quad::GlRule::get(16);
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..4 {
        let za = corners[k];
        let zb = corners[(k + 1) % 4];
        // panels along the edge, denser horizontally where A oscillates
        let len = (zb - za).norm();
        let panels = (4.0 * len).ceil().max(4.0) as usize;
        for p in 0..panels {
            let f0 = p as f64 / panels as f64;
            let f1 = (p + 1) as f64 / panels as f64;
            let mid = za + (zb - za) * 0.5 * (f0 + f1);
            let half = (zb - za) * 0.5 * (f1 - f0);
            for (t, w) in gl.nodes.iter().zip(&gl.weights) {
                let z = mid + half * *t;
                let az = a_fn(z)?;
                if az.norm() < 1e-13 {
                    return Err(Error::Contour(format!("contour passes near a zero at {z}")));
                }
                total += d_fn(z)? / az * half * *w;
            }
        }
    }
    let winding = (total / (2.0 * std::f64::consts::PI * Complex64::i())).re;
    let rounded = winding.round();
    if (winding - rounded).abs() > 0.05 {
        return Err(Error::Contour(format!(
            "winding number {winding} far from an integer"
        )));
    }
    // the window [x0, x1] is symmetric-extended left of 0; subtract the
    // mirror images of zeros in (0, 0.25): A is even, so each zero in
    // (0, 0.25) is double-counted
    let near_edge = zeros_of_a(omega, 0.25)?.len();
    Ok(rounded as usize - near_edge)
}

/// Strict interlacing of the zero sets (B has its automatic zero at 0).
pub fn interlacing_ok(za: &[f64], zb_positive: &[f64]) -> bool {
    // merged sequence starting from B's zero at 0 must alternate B, A, B, A...
    let mut merged: Vec<(f64, u8)> = Vec::new();
    for &z in za {
        merged.push((z, 0));
    }
    for &z in zb_positive {
        merged.push((z, 1));
    }
    merged.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    // drop trailing tags beyond the last A zero to avoid edge effects
    while merged.last().map(|x| x.1) == Some(1) {
        merged.pop();
    }
    if merged.is_empty() {
        return true;
    }
    // after B(0) = 0, the first positive zero should belong to A
    let mut expect = 0u8;
    for (_, tag) in merged {
        if tag != expect {
            return false;
        }
        expect = 1 - expect;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_vanishes_at_origin() {
        let (_, b) = specfun::ab_omega(Complex64::new(0.0, 0.0), 1.5).unwrap();
        assert!(b.norm() < 1e-14);
    }

    #[test]
    fn counts_match_and_interlace_small_window() {
        let omega = 1.5;
        let t_max = 16.0;
        let za = zeros_of_a(omega, t_max).unwrap();
        let contour = count_zeros_contour(omega, t_max, 1.0).unwrap();
        assert_eq!(za.len(), contour, "bracketed {} vs contour {}", za.len(), contour);
        let zb = zeros_of_b(omega, t_max).unwrap();
        assert!(interlacing_ok(&za, &zb), "A zeros {za:?}, B zeros {zb:?}");
    }
}
