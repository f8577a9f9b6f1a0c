//! Evolving (A_a, B_a) along the canonical system and checking its
//! symmetries.

use num_complex::Complex64;
use xi_canonical::canonical::{evolve, m_curve, MCurveSpec, StepControl};
use xi_canonical::kernel::KernelContext;
use xi_canonical::specfun;

fn main() -> xi_canonical::Result<()> {
    let ctx = KernelContext::new(1.5, 512, 1e-10)?;
    let spec = MCurveSpec {
        steps_per_unit: 8000,
        eta_max: 3.2,
        det_sample_step: 0.5,
    };
    let curve = m_curve(&ctx, 1.5, spec, &[])?;
    let z = Complex64::new(2.0, 0.0);
    let (a0, b0) = specfun::ab_omega(z, 1.5)?;
    println!("initial data at a=1: A = {a0:.9}, B = {b0:.9}");
    for &a in &[1.1, 1.25, 1.5] {
        let st = evolve(&curve, z, a, StepControl::default())?;
        let mirror = evolve(&curve, -z, a, StepControl::default())?;
        println!(
            "a={a}: A = {:+.9}  B = {:+.9}  parity defect {:.1e}  Im leakage {:.1e}",
            st.a_big.re,
            st.b_big.re,
            (st.a_big - mirror.a_big).norm() + (st.b_big + mirror.b_big).norm(),
            st.a_big.im.abs() + st.b_big.im.abs(),
        );
    }
    Ok(())
}
