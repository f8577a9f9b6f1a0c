//! Two expressions of the operator applied to a test function: directly
//! through the kernel h_ω, and through the once-integrated kernel h_ω⟨1⟩
//! with an outer √x d/dx √x taken by centered differences.

use crate::error::{Error, Result};
use crate::kernel::KernelContext;
use crate::quad::{graded_breaks, merge_breaks, uniform_breaks, CompositeRule};

/// Quadrature rule in y over the support, with panels graded into the kink
/// locations y = n/x of the kernels. Built once per evaluation point so that
/// centered differences in x see a rule that does not change shape.
fn y_rule(support: (f64, f64), x: f64, nodes: usize) -> CompositeRule {
    let (lo, hi) = support;
    let mut sets: Vec<Vec<f64>> = vec![uniform_breaks(lo, hi, (8.0 * (hi - lo)).ceil().max(8.0) as usize)];
    let mut n = 1.0f64;
    while n / x < hi {
        let kink = n / x;
        if kink > lo {
            sets.push(graded_breaks(kink, (kink + 0.4).min(hi), true, 0.3, 1e-9));
        }
        n += 1.0;
    }
    let refs: Vec<&[f64]> = sets.iter().map(|v| v.as_slice()).collect();
    CompositeRule::on_breaks(&merge_breaks(&refs), nodes)
}

/// (H f)(x) = ∫ h_ω(xy) f(y) dy over the support of f.
pub fn watson_direct(
    ctx: &KernelContext,
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    x: f64,
) -> Result<f64> {
    let (lo, hi) = support;
    assert!(x > 0.0 && hi > lo && lo > 0.0);
    if x * hi <= 1.0 {
        return Ok(0.0);
    }
    let rule = y_rule(support, x, 16);
    let mut err: Option<Error> = None;
    let val = rule.integrate(|y| match ctx.h(x * y) {
        Ok(h) => h * f(y),
        Err(e) => {
            err = Some(e);
            0.0
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(val),
    }
}

/// (H f)(x) = √x d/dx [ √x ∫ h_ω⟨1⟩(xy) f(y) dy ], the outer derivative by
/// centered differences with relative step `step`. The inner integrals for
/// x ± δ share one quadrature rule so the differencing is not polluted by
/// panel-structure changes.
pub fn watson_via_h1(
    ctx: &KernelContext,
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    x: f64,
    step: f64,
) -> Result<f64> {
    let rule = y_rule(support, x, 16);
    let mut err: Option<Error> = None;
    let mut pairing = |xi: f64| -> f64 {
        let w = rule.integrate(|y| match ctx.h1(xi * y) {
            Ok(h1) => h1 * f(y),
            Err(e) => {
                err = Some(e);
                0.0
            }
        });
        xi.sqrt() * w
    };
    let d = step * x;
    let up = pairing(x + d);
    let dn = pairing(x - d);
    match err {
        Some(e) => Err(e),
        None => Ok(x.sqrt() * (up - dn) / (2.0 * d)),
    }
}

/// Smooth bump supported on (lo, hi), C^∞ with all derivatives vanishing at
/// the endpoints.
pub fn bump(lo: f64, hi: f64) -> impl Fn(f64) -> f64 {
    move |y: f64| {
        let u = (2.0 * y - lo - hi) / (hi - lo);
        if u.abs() >= 1.0 {
            0.0
        } else {
            (-1.0 / (1.0 - u * u)).exp()
        }
    }
}

/// | ‖Hf‖²_{[0, x_max]} / ‖f‖² − 1 |: the isometry defect of the truncated
/// image norm; drifts to 0 as x_max grows.
pub fn isometry_defect(
    ctx: &KernelContext,
    f: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    x_max: f64,
) -> Result<f64> {
    let (lo, hi) = support;
    let base = CompositeRule::on_breaks(&uniform_breaks(lo, hi, 24), 16);
    let norm_f: f64 = base.integrate(|y| f(y) * f(y));

    // image support starts at 1/hi
    let start = 1.0 / hi;
    let head = graded_breaks(start, (2.0 * start).min(x_max), true, 0.4, 1e-6);
    let body = uniform_breaks(
        (2.0 * start).min(x_max),
        x_max,
        (2.0 * x_max).ceil() as usize,
    );
    let rule = CompositeRule::on_breaks(&merge_breaks(&[&head, &body]), 12);
    let mut err: Option<Error> = None;
    let norm_img: f64 = rule.integrate(|x| match watson_direct(ctx, f, support, x) {
        Ok(v) => v * v,
        Err(e) => {
            err = Some(e);
            0.0
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok((norm_img / norm_f - 1.0).abs()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_vanishes_when_products_stay_below_one() {
        let ctx = KernelContext::new(1.5, 64, 1e-10).unwrap();
        let f = bump(0.5, 0.9);
        let v = watson_direct(&ctx, &f, (0.5, 0.9), 1.0).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn two_routes_agree_on_bumps() {
        let ctx = KernelContext::new(1.5, 64, 1e-10).unwrap();
        let f = bump(1.0, 2.0);
        for &x in &[1.5f64, 0.8, 2.4] {
            let direct = watson_direct(&ctx, &f, (1.0, 2.0), x).unwrap();
            let via = watson_via_h1(&ctx, &f, (1.0, 2.0), x, 1e-4).unwrap();
            assert!(
                (direct - via).abs() <= 1e-4 * direct.abs().max(0.1),
                "x={x}: direct {direct} vs h1-route {via}"
            );
        }
    }
}
