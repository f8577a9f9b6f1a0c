//! Spot values and supports of the arithmetic kernels.

use xi_canonical::kernel::KernelContext;

fn main() -> xi_canonical::Result<()> {
    let ctx = KernelContext::new(1.5, 64, 1e-10)?;
    println!("support: g(1.2) = {}, h(0.8) = {}", ctx.g(1.2)?, ctx.h(0.8)?);
    for &x in &[0.2, 0.5, 0.8, 0.95] {
        println!("g({x}) = {:+.9}   g1({x}) = {:+.9}", ctx.g(x)?, ctx.g1(x)?);
    }
    for &x in &[1.5, 2.5, 4.0, 9.5] {
        println!("h({x}) = {:+.9}   h1({x}) = {:+.9}", ctx.h(x)?, ctx.h1(x)?);
    }
    // the two routes to h1
    let x = 7.3;
    println!(
        "h1({x}) sum route {:+.12e} vs integral route {:+.12e}",
        ctx.h1(x)?,
        ctx.h1_integral(x)?
    );
    // multiplicativity of the coefficients
    let (m, n) = (9usize, 10usize);
    println!(
        "c({m})*c({n}) - c({}) = {:.3e}",
        m * n,
        ctx.jordan_c(m)? * ctx.jordan_c(n)? - ctx.jordan_c(m * n)?
    );
    Ok(())
}
