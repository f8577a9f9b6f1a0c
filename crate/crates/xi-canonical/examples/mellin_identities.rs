//! Truncated Mellin transforms of the kernels against Θ_ω.

use num_complex::Complex64;
use xi_canonical::kernel::KernelContext;
use xi_canonical::specfun;

fn main() -> xi_canonical::Result<()> {
    for &omega in &[1.2, 1.5, 2.0] {
        let ctx = KernelContext::new(omega, 300, 1e-4)?;
        let z = Complex64::new(0.5, omega + 1.5);
        let theta = specfun::theta_omega(z, omega)?;
        let h = ctx.mellin_h(z, 200.0)?;
        let h1 = ctx.mellin_h1(z, 200.0)?;
        let expected1 = Complex64::i() / z * theta;
        println!(
            "omega={omega}: h-transform rel err {:.2e} (tail bound {:.1e}), h1-transform rel err {:.2e}",
            (h.value - theta).norm() / theta.norm(),
            h.tail_bound,
            (h1.value - expected1).norm() / expected1.norm(),
        );
    }
    Ok(())
}
