//! The boundary integral equation X(x) + ε ∫_0^a h_ω(xy) X(y) dy = h_ω(ax)
//! and its unique solution φ_a^ε, extended from the grid to all of (0, ∞) by
//! φ̃(x) = h_ω(ax) − ε ∫_0^a h_ω(xy) φ(y) dy.

use super::FactoredOperator;
use crate::error::{Error, Result};
use crate::kernel::KernelContext;
use nalgebra::DVector;

const CONDITION_LIMIT: f64 = 1e12;

/// Grid solution of the boundary equation for one sign ε, with everything
/// needed to evaluate the extension rule off-grid.
#[derive(Debug, Clone)]
pub struct PhiSolution {
    /// +1.0 or -1.0.
    pub eps: f64,
    pub a: f64,
    /// φ at the grid nodes.
    pub grid_values: Vec<f64>,
    /// Grid nodes and weights, copied from the operator.
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Residual of the linear solve in the infinity norm.
    pub residual: f64,
    /// One-norm condition estimate of I + εM.
    pub condition: f64,
}

/// Solve (I + ε H)φ = h(a·) on the grid. For a <= 1 the operator vanishes
/// and the solution is the convention φ(x) = h(ax) itself.
pub fn solve_phi(ctx: &KernelContext, factored: &FactoredOperator, eps: f64) -> Result<PhiSolution> {
    assert!(eps == 1.0 || eps == -1.0);
    let op = &factored.op;
    let a = op.grid.a;
    let n = op.len();
    let sw: Vec<f64> = op.grid.weights.iter().map(|w| w.sqrt()).collect();
    let mut rhs = DVector::zeros(n);
    for i in 0..n {
        rhs[i] = sw[i] * ctx.h(a * op.grid.nodes[i])?;
    }
    let cond = factored.condition_estimate(eps);
    if cond > CONDITION_LIMIT {
        return Err(Error::Solve {
            cond,
            limit: CONDITION_LIMIT,
        });
    }
    // symmetrized system (I + εS)ψ = √w·rhs, φ = ψ/√w
    let psi = factored.solve(eps, &rhs)?;
    let lhs = &psi + eps * (&op.matrix * &psi);
    let residual = (&lhs - &rhs).amax() / rhs.amax().max(1e-300);
    let grid_values: Vec<f64> = (0..n).map(|i| psi[i] / sw[i]).collect();
    Ok(PhiSolution {
        eps,
        a,
        grid_values,
        nodes: op.grid.nodes.clone(),
        weights: op.grid.weights.clone(),
        residual,
        condition: cond,
    })
}

/// The convention solution for 0 < a <= 1, where the operator is zero.
pub fn phi_below_one(ctx: &KernelContext, a: f64, eps: f64, x: f64) -> Result<f64> {
    let _ = eps;
    ctx.h(a * x)
}

impl PhiSolution {
    /// Extension rule φ̃(x) = h(ax) − ε Σ_j w_j h(x x_j) φ_j, valid for any
    /// x > 0; vanishes identically on (0, 1/a] by the kernel support.
    pub fn extension(&self, ctx: &KernelContext, x: f64) -> Result<f64> {
        let mut acc = ctx.h(self.a * x)?;
        for ((&xj, &wj), &phij) in self
            .nodes
            .iter()
            .zip(&self.weights)
            .zip(&self.grid_values)
        {
            let p = x * xj;
            if p > 1.0 {
                acc -= self.eps * wj * ctx.h(p)? * phij;
            }
        }
        Ok(acc)
    }

    /// Boundary value φ_a^ε(a).
    pub fn at_boundary(&self, ctx: &KernelContext) -> Result<f64> {
        self.extension(ctx, self.a)
    }
}

/// μ(a) = a φ_a^+(a) + a φ_a^-(a); zero for a <= 1.
pub fn mu_of_a(ctx: &KernelContext, factored: &FactoredOperator) -> Result<f64> {
    let a = factored.op.grid.a;
    if a <= 1.0 {
        return Ok(0.0);
    }
    let plus = solve_phi(ctx, factored, 1.0)?;
    let minus = solve_phi(ctx, factored, -1.0)?;
    Ok(a * (plus.at_boundary(ctx)? + minus.at_boundary(ctx)?))
}
