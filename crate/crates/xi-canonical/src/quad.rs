//! Gauss–Legendre quadrature: single panels, composite rules over explicit
//! breakpoints, and geometrically graded panels toward integrable endpoint
//! singularities.

use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes and weights of an n-point Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GlRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GlRule {
    /// Compute the rule by Newton iteration on the Legendre polynomial.
    pub fn compute(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi-style initial guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Legendre recurrence for P_n(x) and P'_n(x).
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GlRule { nodes, weights }
    }

    /// Cached lookup; rules are immutable once built.
    pub fn get(n: usize) -> Arc<GlRule> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GlRule>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(GlRule::compute(n)))
            .clone()
    }
}

/// A quadrature rule assembled from panels: flat lists of abscissae and weights.
#[derive(Debug, Clone, Default)]
pub struct CompositeRule {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
}

impl CompositeRule {
    /// Gauss–Legendre with `n_per_panel` nodes on each interval of `breaks`.
    pub fn on_breaks(breaks: &[f64], n_per_panel: usize) -> Self {
        let rule = GlRule::get(n_per_panel);
        let mut points = Vec::with_capacity(n_per_panel * breaks.len().saturating_sub(1));
        let mut weights = Vec::with_capacity(points.capacity());
        for w in breaks.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b <= a {
                continue;
            }
            let c = 0.5 * (a + b);
            let h = 0.5 * (b - a);
            for (t, wt) in rule.nodes.iter().zip(&rule.weights) {
                points.push(c + h * t);
                weights.push(h * wt);
            }
        }
        CompositeRule { points, weights }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn integrate_complex(&self, mut f: impl FnMut(f64) -> Complex64) -> Complex64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }
}

/// Uniform breakpoints a = b_0 < ... < b_n = b.
pub fn uniform_breaks(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 1 && b > a);
    (0..=n)
        .map(|i| a + (b - a) * i as f64 / n as f64)
        .collect()
}

/// Breakpoints geometrically graded toward one endpoint, for integrands that
/// behave like dist^gamma (gamma > -1) there. The innermost sliver of
/// relative width `floor_rel` is dropped, so `floor_rel` must be chosen with
/// `floor_rel^(gamma+1)` below the target tolerance. When the singular end
/// sits away from zero, express the integrand in the distance variable and
/// grade toward 0 instead, so that the distance is never formed by
/// cancellation.
pub fn graded_breaks(a: f64, b: f64, toward_a: bool, ratio: f64, floor_rel: f64) -> Vec<f64> {
    assert!(b > a && ratio > 0.0 && ratio < 1.0);
    let len = b - a;
    let mut offs = vec![1.0f64];
    let mut d = ratio;
    while d > floor_rel {
        offs.push(d);
        d *= ratio;
    }
    offs.push(floor_rel.min(*offs.last().unwrap()));
    // offs descending from 1 toward floor_rel (relative distances from the graded end).
    let mut breaks: Vec<f64> = if toward_a {
        offs.iter().rev().map(|r| a + len * r).collect()
    } else {
        offs.iter().map(|r| b - len * r).collect()
    };
    if toward_a {
        breaks.insert(0, a + len * floor_rel);
    } else {
        breaks.push(b - len * floor_rel);
    }
    breaks.dedup();
    breaks
}

/// Sorted union of breakpoint sets, with near-duplicates merged.
pub fn merge_breaks(sets: &[&[f64]]) -> Vec<f64> {
    let mut all: Vec<f64> = sets.iter().flat_map(|s| s.iter().copied()).collect();
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<f64> = Vec::with_capacity(all.len());
    for x in all {
        match out.last() {
            // relative tolerance only: graded sets legitimately carry
            // breakpoints many orders of magnitude below 1
            Some(&last) if (x - last).abs() <= 1e-13 * x.abs().max(last.abs()) => {}
            _ => out.push(x),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gl_rule_integrates_polynomials_exactly() {
        let rule = GlRule::compute(8);
        // degree 15 is the highest exact degree for n = 8
        for k in [0usize, 3, 7, 15] {
            let val: f64 = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(&x, &w)| w * x.powi(k as i32))
                .sum();
            let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!((val - exact).abs() < 1e-14, "k={k}: {val} vs {exact}");
        }
    }

    #[test]
    fn composite_weights_sum_to_length() {
        let breaks = uniform_breaks(0.0, 2.5, 7);
        let rule = CompositeRule::on_breaks(&breaks, 12);
        let total: f64 = rule.weights.iter().sum();
        assert_relative_eq!(total, 2.5, max_relative = 1e-13);
    }

    #[test]
    fn graded_panels_handle_endpoint_singularity() {
        // integrand x^{-1/4}: integral over [0,1] is 4/3; dropped sliver
        // (1e-15)^{3/4} is below the tolerance
        let breaks = graded_breaks(0.0, 1.0, true, 0.3, 1e-15);
        let rule = CompositeRule::on_breaks(&breaks, 16);
        let val = rule.integrate(|x| x.powf(-0.25));
        assert_relative_eq!(val, 4.0 / 3.0, max_relative = 1e-10);

        // a right-end singularity, written in the distance variable u = 1-x:
        // int_0^1 (1-x)^{-1/2} dx = int_0^1 u^{-1/2} du = 2
        let breaks = graded_breaks(0.0, 1.0, true, 0.3, 1e-20);
        let rule = CompositeRule::on_breaks(&breaks, 16);
        let val = rule.integrate(|u| u.powf(-0.5));
        assert_relative_eq!(val, 2.0, max_relative = 1e-9);
    }

    #[test]
    fn merge_breaks_dedups() {
        let a = [0.0, 1.0, 2.0];
        let b = [1.0 + 1e-15, 1.5];
        let m = merge_breaks(&[&a, &b]);
        assert_eq!(m.len(), 4);
    }

    #[test]
    fn oscillatory_integral_converges() {
        // int_1^6 cos(30 ln x) dx/x = sin(30 ln 6)/30
        let breaks = uniform_breaks(1.0, 6.0, 24);
        let rule = CompositeRule::on_breaks(&breaks, 16);
        let val = rule.integrate(|x| (30.0 * x.ln()).cos() / x);
        let exact = (30.0 * 6.0f64.ln()).sin() / 30.0;
        assert_relative_eq!(val, exact, max_relative = 1e-12);
    }
}
