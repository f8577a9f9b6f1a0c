//! Discretization of the Hankel-type operator with kernel h_ω(xy) truncated
//! to [0, a], its Fredholm determinants, and the integral-equation solve for
//! the boundary functions φ_a^±.
//!
//! The kernel vanishes for xy < 1, so the whole operator is exactly zero for
//! a <= 1; for a > 1 it is a self-adjoint Hilbert–Schmidt contraction
//! (‖H‖ < 1) once ω > 1/2, with a continuous kernel once ω > 1. Only ω > 1
//! is supported here.

mod fredholm;
mod phi;
mod transport;
mod watson;

pub use fredholm::{fredholm_series, FredholmSeries};
pub use phi::{mu_of_a, phi_below_one, solve_phi, PhiSolution};
pub use transport::{evolve_phi, richardson_combine, PhiEvolution, PhiProfile};
pub use watson::{bump, isometry_defect, watson_direct, watson_via_h1};

use crate::error::{Error, Result};
use crate::kernel::KernelContext;
use crate::quad::{merge_breaks, CompositeRule};
use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

/// Composite Gauss–Legendre grid on [0, a] whose panel breaks include the
/// kernel-support boundary 1/a, the points n/a where the boundary data
/// h_ω(ax) kinks, and the diagonal kink points √n.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    pub a: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub panel_breaks: Vec<f64>,
    pub n_per_panel: usize,
}

/// Composite grid with `n_per_panel` Gauss nodes per panel; `refinement`
/// doubles the panel count each step for convergence studies.
pub fn build_grid(a: f64, n_per_panel: usize, refinement: u32) -> QuadratureGrid {
    build_grid_with_panels(a, n_per_panel, base_panels(a) << refinement)
}

/// Default panel budget max(8, ⌈8a⌉).
pub fn base_panels(a: f64) -> usize {
    8.max((8.0 * a).ceil() as usize)
}

/// Composite grid with an explicit panel budget. Finite-difference sweeps in
/// `a` pass a fixed budget so that the grid varies smoothly with `a`.
pub fn build_grid_with_panels(a: f64, n_per_panel: usize, panels: usize) -> QuadratureGrid {
    assert!(a > 0.0 && n_per_panel >= 4 && panels >= 1);
    let mut structural = vec![0.0, a];
    let m = (a * a).floor() as usize;
    for n in 1..=m {
        let x = n as f64 / a;
        if x < a {
            structural.push(x);
        }
        let r = (n as f64).sqrt();
        if r < a {
            structural.push(r);
        }
    }
    let structural = merge_breaks(&[&structural]);
    // uniform fill of each structural interval to reach the panel budget
    let target_w = a / panels as f64;
    let mut breaks = Vec::with_capacity(panels + structural.len());
    for w in structural.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let k = ((hi - lo) / target_w).ceil().max(1.0) as usize;
        for i in 0..k {
            breaks.push(lo + (hi - lo) * i as f64 / k as f64);
        }
    }
    breaks.push(a);
    let rule = CompositeRule::on_breaks(&breaks, n_per_panel);
    QuadratureGrid {
        a,
        nodes: rule.points,
        weights: rule.weights,
        panel_breaks: breaks,
        n_per_panel,
    }
}

/// Symmetrized Nyström matrix M_ij = √w_i h_ω(x_i x_j) √w_j together with
/// its grid.
#[derive(Debug, Clone)]
pub struct DiscreteOperator {
    pub grid: QuadratureGrid,
    pub matrix: DMatrix<f64>,
    pub omega: f64,
}

/// Assemble the symmetrized Nyström matrix. Requires ω > 1 (continuous
/// kernel regime).
pub fn discretize(ctx: &KernelContext, grid: &QuadratureGrid) -> Result<DiscreteOperator> {
    if ctx.omega() <= 1.0 {
        return Err(Error::Regime(format!(
            "operator discretization needs omega > 1, got {}",
            ctx.omega()
        )));
    }
    let needed = (grid.a * grid.a).floor() as usize;
    if needed > ctx.n_max() {
        return Err(Error::Range {
            n: needed,
            n_max: ctx.n_max(),
        });
    }
    let n = grid.nodes.len();
    let sw: Vec<f64> = grid.weights.iter().map(|w| w.sqrt()).collect();
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let xi = grid.nodes[i];
            let mut row = vec![0.0; n];
            for j in i..n {
                let p = xi * grid.nodes[j];
                if p > 1.0 {
                    // kernel support: h vanishes on (0,1)
                    row[j] = sw[i] * ctx.h(p).expect("kernel eval inside checked range") * sw[j];
                }
            }
            row
        })
        .collect();
    let mut matrix = DMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for j in i..n {
            matrix[(i, j)] = row[j];
            matrix[(j, i)] = row[j];
        }
    }
    Ok(DiscreteOperator {
        grid: grid.clone(),
        matrix,
        omega: ctx.omega(),
    })
}

/// Exact traces of the continuous operator and its square, reduced to
/// one-dimensional integrals:
/// tr H = ∫_0^a h(x²) dx = ½ ∫_1^{a²} h(u) u^{-1/2} du,
/// tr H² = ∫_1^{a²} h(u)² ln(a²/u) du.
pub fn exact_traces(ctx: &KernelContext, a: f64) -> Result<(f64, f64)> {
    if a * a <= 1.0 {
        return Ok((0.0, 0.0));
    }
    let rule = ctx.unit_graded_rule(1.0, a * a, 14, 1e-12);
    let mut err: Option<Error> = None;
    let a2 = a * a;
    let tr1 = 0.5
        * rule.integrate(|u| match ctx.h(u) {
            Ok(h) => h / u.sqrt(),
            Err(e) => {
                err = Some(e);
                0.0
            }
        });
    let tr2 = rule.integrate(|u| match ctx.h(u) {
        Ok(h) => h * h * (a2 / u).ln(),
        Err(e) => {
            err = Some(e);
            0.0
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok((tr1, tr2)),
    }
}

/// LU factorizations of I + M and I - M, shared by determinants and the
/// integral-equation solves.
pub struct FactoredOperator {
    pub op: DiscreteOperator,
    lu_plus: nalgebra::linalg::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    lu_minus: nalgebra::linalg::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    /// log-determinant corrections transferring tr M and tr M² to the exact
    /// operator traces; zero when factored without a context.
    trace_correction: (f64, f64),
}

impl DiscreteOperator {
    pub fn len(&self) -> usize {
        self.grid.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.nodes.is_empty()
    }

    /// Squared Frobenius norm Σ M_ij², the discrete Hilbert–Schmidt norm.
    pub fn frobenius_sq(&self) -> f64 {
        self.matrix.iter().map(|v| v * v).sum()
    }

    /// Largest |eigenvalue|, by power iteration on M² so that the
    /// near-degenerate ± pairs of this operator do not stall convergence.
    pub fn spectral_radius(&self) -> f64 {
        let n = self.len();
        if n == 0 {
            return 0.0;
        }
        let mut v = DVector::from_fn(n, |i, _| 0.7 + (i as f64 * 0.618034).fract());
        v /= v.norm();
        let mut lambda_sq = 0.0f64;
        for _ in 0..600 {
            let w = &self.matrix * (&self.matrix * &v);
            let norm = w.norm();
            if norm == 0.0 {
                return 0.0;
            }
            let next = v.dot(&w).abs();
            let done = (next - lambda_sq).abs() < 1e-13 * next.max(1e-300);
            lambda_sq = next;
            v = w / norm;
            if done {
                break;
            }
        }
        lambda_sq.sqrt()
    }

    /// Factor I ± M once; passing `ctx` enables the exact-trace determinant
    /// correction.
    pub fn factorize(&self, ctx: Option<&KernelContext>) -> Result<FactoredOperator> {
        let n = self.len();
        let id = DMatrix::identity(n, n);
        let lu_plus = nalgebra::linalg::LU::new(&id + &self.matrix);
        let lu_minus = nalgebra::linalg::LU::new(&id - &self.matrix);
        let trace_correction = match ctx {
            Some(ctx) => {
                let (tr1, tr2) = exact_traces(ctx, self.grid.a)?;
                (tr1 - self.matrix.trace(), tr2 - self.frobenius_sq())
            }
            None => (0.0, 0.0),
        };
        Ok(FactoredOperator {
            op: self.clone(),
            lu_plus,
            lu_minus,
            trace_correction,
        })
    }
}

impl FactoredOperator {
    /// log det(I - λH) for λ = ∓1 via the discrete determinant plus the
    /// first- and second-trace corrections:
    /// log det(I-λH) = log det(I-λM) - λ(trH - trM) - λ²(trH² - trM²)/2.
    fn log_det(&self, lambda: f64) -> Result<f64> {
        let lu = if lambda < 0.0 {
            &self.lu_plus
        } else {
            &self.lu_minus
        };
        let det = lu.determinant();
        if !(det > 0.0) {
            return Err(Error::Singular(format!(
                "det(I {} M) = {det}; spectral radius >= 1 or discretization failure",
                if lambda < 0.0 { "+" } else { "-" }
            )));
        }
        let (d1, d2) = self.trace_correction;
        Ok(det.ln() - lambda * d1 - 0.5 * lambda * lambda * d2)
    }

    /// (det(I+H), det(I-H)); both must be strictly positive.
    pub fn det_pair(&self) -> Result<(f64, f64)> {
        Ok((self.log_det(-1.0)?.exp(), self.log_det(1.0)?.exp()))
    }

    /// log det(I+H) - log det(I-H), the log of the determinant ratio.
    pub fn log_det_ratio(&self) -> Result<f64> {
        Ok(self.log_det(-1.0)? - self.log_det(1.0)?)
    }

    /// Solve (I + ε M) y = rhs via the stored factorization.
    pub(crate) fn solve(&self, eps: f64, rhs: &DVector<f64>) -> Result<DVector<f64>> {
        let lu = if eps > 0.0 {
            &self.lu_plus
        } else {
            &self.lu_minus
        };
        lu.solve(rhs)
            .ok_or_else(|| Error::Singular("factorization failed to solve".into()))
    }

    /// One-norm condition estimate of I + ε M (Hager-style probe on the
    /// inverse through the stored factorization).
    pub fn condition_estimate(&self, eps: f64) -> f64 {
        let n = self.op.len();
        if n == 0 {
            return 1.0;
        }
        let m = &self.op.matrix;
        let mut a_norm = 0.0f64;
        for j in 0..n {
            let mut col = 0.0;
            for i in 0..n {
                let aij = (if i == j { 1.0 } else { 0.0 }) + eps * m[(i, j)];
                col += aij.abs();
            }
            a_norm = a_norm.max(col);
        }
        // Hager estimate of ||A^{-1}||_1; A is symmetric, so transpose solves
        // reuse the same factorization
        let mut x = DVector::from_element(n, 1.0 / n as f64);
        let mut est = 0.0f64;
        for _ in 0..5 {
            let y = match self.solve(eps, &x) {
                Ok(y) => y,
                Err(_) => return f64::INFINITY,
            };
            let new_est = y.iter().map(|v| v.abs()).sum::<f64>();
            let xi =
                DVector::from_iterator(n, y.iter().map(|v| if *v >= 0.0 { 1.0 } else { -1.0 }));
            let z = match self.solve(eps, &xi) {
                Ok(z) => z,
                Err(_) => return f64::INFINITY,
            };
            let (mut best_j, mut best) = (0usize, f64::MIN);
            for j in 0..n {
                if z[j].abs() > best {
                    best = z[j].abs();
                    best_j = j;
                }
            }
            if new_est <= est {
                break;
            }
            est = new_est;
            x = DVector::zeros(n);
            x[best_j] = 1.0;
        }
        a_norm * est.max(1.0)
    }
}

/// Convenience wrapper: factor and take both determinants with the exact
/// trace correction.
pub fn det_pair(ctx: &KernelContext, op: &DiscreteOperator) -> Result<(f64, f64)> {
    op.factorize(Some(ctx))?.det_pair()
}

/// 2 log a · ∫_1^{a²} h(u)² du, the Hilbert–Schmidt bound on ‖H‖²_F.
pub fn hs_norm_bound(ctx: &KernelContext, a: f64) -> Result<f64> {
    if a <= 1.0 {
        return Ok(0.0);
    }
    let rule = ctx.unit_graded_rule(1.0, a * a, 14, 1e-12);
    let mut err: Option<Error> = None;
    let int = rule.integrate(|u| match ctx.h(u) {
        Ok(h) => h * h,
        Err(e) => {
            err = Some(e);
            0.0
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(2.0 * a.ln() * int),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ctx15() -> KernelContext {
        KernelContext::new(1.5, 64, 1e-10).unwrap()
    }

    #[test]
    fn grid_weights_sum_to_a() {
        for &a in &[0.5f64, 1.0, 2.0, 3.3] {
            let g = build_grid(a, 12, 0);
            let total: f64 = g.weights.iter().sum();
            assert_relative_eq!(total, a, max_relative = 1e-12);
            assert!(g.nodes.iter().all(|&x| x > 0.0 && x < a));
        }
    }

    #[test]
    fn refinement_doubles_panels() {
        let g0 = build_grid(2.0, 12, 0);
        let g1 = build_grid(2.0, 12, 1);
        // structural breakpoints are shared, so the count roughly doubles
        let p0 = g0.panel_breaks.len() - 1;
        let p1 = g1.panel_breaks.len() - 1;
        assert!(p1 as f64 >= 1.8 * p0 as f64, "panels {p0} -> {p1}");
    }

    #[test]
    fn operator_is_zero_for_a_below_one() {
        let ctx = ctx15();
        for &a in &[0.5f64, 0.99, 1.0] {
            let op = discretize(&ctx, &build_grid(a, 8, 0)).unwrap();
            assert_eq!(op.matrix.iter().filter(|v| **v != 0.0).count(), 0);
            let f = op.factorize(Some(&ctx)).unwrap();
            let (dp, dm) = f.det_pair().unwrap();
            assert_eq!((dp, dm), (1.0, 1.0));
        }
    }

    #[test]
    fn regime_guard() {
        let ctx = KernelContext::new(1.0, 64, 1e-10).unwrap();
        let g = build_grid(2.0, 8, 0);
        assert!(matches!(discretize(&ctx, &g), Err(Error::Regime(_))));
    }

    #[test]
    fn contraction_and_symmetry() {
        // a = 1.4 keeps a resolvable gap between the top eigenvalue and 1;
        // closer truncations of the unit-norm operator pile up at ±1 faster
        // than double-precision discretization can separate
        let ctx = ctx15();
        let op = discretize(&ctx, &build_grid(1.4, 16, 0)).unwrap();
        let n = op.len();
        for i in 0..n {
            for j in (i + 1)..n {
                assert_eq!(op.matrix[(i, j)], op.matrix[(j, i)]);
            }
        }
        let rho = op.spectral_radius();
        assert!(rho < 1.0 && rho > 0.0, "rho = {rho}");
    }

    #[test]
    fn frobenius_respects_hs_bound() {
        let ctx = ctx15();
        for &a in &[1.5f64, 2.0] {
            let op = discretize(&ctx, &build_grid(a, 16, 0)).unwrap();
            let bound = hs_norm_bound(&ctx, a).unwrap();
            let fro = op.frobenius_sq();
            assert!(
                fro <= bound * (1.0 + 1e-6),
                "a={a}: frobenius² {fro} vs bound {bound}"
            );
        }
    }

    #[test]
    fn det_product_identity() {
        // det(I+M) det(I-M) = det(I-M²), on the raw discrete determinants
        let ctx = ctx15();
        let op = discretize(&ctx, &build_grid(1.45, 12, 0)).unwrap();
        let f = op.factorize(None).unwrap();
        let (dp, dm) = f.det_pair().unwrap();
        let n = op.len();
        let m2 = DMatrix::identity(n, n) - &op.matrix * &op.matrix;
        let det_m2 = nalgebra::linalg::LU::new(m2).determinant();
        assert_relative_eq!(dp * dm, det_m2, max_relative = 1e-10);
    }

    #[test]
    fn exact_traces_match_discrete() {
        let ctx = ctx15();
        let op = discretize(&ctx, &build_grid(2.0, 20, 1)).unwrap();
        let (tr1, tr2) = exact_traces(&ctx, 2.0).unwrap();
        assert_relative_eq!(op.matrix.trace(), tr1, max_relative = 1e-4);
        assert_relative_eq!(op.frobenius_sq(), tr2, max_relative = 1e-4);
    }
}
