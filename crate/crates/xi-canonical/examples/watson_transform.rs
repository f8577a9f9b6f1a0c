//! Applying the operator two ways: the kernel h_ω directly, and the
//! once-integrated kernel h_ω⟨1⟩ under the outer derivative √x d/dx √x.

use xi_canonical::kernel::KernelContext;
use xi_canonical::operator::{bump, isometry_defect, watson_direct, watson_via_h1};

fn main() -> xi_canonical::Result<()> {
    let ctx = KernelContext::new(1.5, 512, 1e-10)?;
    let f = bump(1.0, 2.0);
    for &x in &[0.9, 1.5, 2.2] {
        let direct = watson_direct(&ctx, &f, (1.0, 2.0), x)?;
        let via = watson_via_h1(&ctx, &f, (1.0, 2.0), x, 1e-4)?;
        println!("x={x}: direct {direct:+.9e}   via h1 {via:+.9e}   diff {:.1e}", (direct - via).abs());
    }
    for &x_max in &[50.0, 100.0, 150.0] {
        println!(
            "isometry defect of the truncated image norm at X={x_max}: {:.3e}",
            isometry_defect(&ctx, &f, (1.0, 2.0), x_max)?
        );
    }
    Ok(())
}
