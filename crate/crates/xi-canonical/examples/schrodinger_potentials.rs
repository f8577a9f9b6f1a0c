//! The potential pair V^± and the eigenvalue-equation residual.

use num_complex::Complex64;
use xi_canonical::canonical::{m_curve, potentials, schrodinger_residual, MCurveSpec};
use xi_canonical::kernel::KernelContext;

fn main() -> xi_canonical::Result<()> {
    let ctx = KernelContext::new(1.5, 512, 1e-10)?;
    let spec = MCurveSpec {
        steps_per_unit: 16000,
        eta_max: 3.2,
        det_sample_step: 0.5,
    };
    let curve = m_curve(&ctx, 1.5, spec, &[])?;
    let samples: Vec<f64> = (0..8).map(|k| 1.1 + 0.04 * k as f64).collect();
    for p in potentials(&curve, &samples, 1e-3) {
        println!(
            "a={:.2}: m = {:9.4}  V+ = {:10.3}  V- = {:10.3}",
            p.a, p.m, p.v_plus, p.v_minus
        );
    }
    for &(a, zre) in &[(1.2, 1.5), (1.3, 3.0)] {
        let r = schrodinger_residual(&curve, a, Complex64::new(zre, 0.0), 4e-3)?;
        println!("eigen-equation residual at (a={a}, z={zre}): {r:.2e}");
    }
    Ok(())
}
