//! The integral-equation solutions φ_a^± and the coupling value μ(a).

use xi_canonical::kernel::KernelContext;
use xi_canonical::operator::{build_grid, discretize, mu_of_a, solve_phi};

fn main() -> xi_canonical::Result<()> {
    let ctx = KernelContext::new(1.5, 64, 1e-10)?;
    for &a in &[1.1, 1.2, 1.3, 1.4] {
        let op = discretize(&ctx, &build_grid(a, 16, 1))?;
        let f = op.factorize(Some(&ctx))?;
        let plus = solve_phi(&ctx, &f, 1.0)?;
        let minus = solve_phi(&ctx, &f, -1.0)?;
        println!(
            "a={a}: residual {:.1e}, condition {:.1e}, phi+(a) = {:+.6}, phi-(a) = {:+.6}, mu = {:+.6}",
            plus.residual.max(minus.residual),
            plus.condition,
            plus.at_boundary(&ctx)?,
            minus.at_boundary(&ctx)?,
            mu_of_a(&ctx, &f)?,
        );
        // the extension vanishes below the support edge
        assert_eq!(plus.extension(&ctx, 0.5 / a)?, 0.0);
    }
    Ok(())
}
