//! Unit modulus, normalization and reflection of Θ_ω.

use num_complex::Complex64;
use xi_canonical::specfun;

fn main() -> xi_canonical::Result<()> {
    for &omega in &[0.75, 1.5, 2.5] {
        println!("omega = {omega}");
        for &u in &[0.0, 3.0, 11.5, 37.0] {
            let t = specfun::theta_omega(Complex64::new(u, 0.0), omega)?;
            println!("  |theta({u:5})| - 1 = {:+.3e}", t.norm() - 1.0);
        }
        let z = Complex64::new(1.7, 0.9);
        let p = specfun::theta_omega(z, omega)? * specfun::theta_omega(-z, omega)?;
        println!("  theta(z) * theta(-z) - 1 = {:.3e} at z = {z}", (p - 1.0).norm());
        let inside = specfun::theta_omega(Complex64::new(2.0, 1.0), omega)?;
        println!("  |theta(2+i)| = {:.6} (inner: < 1)", inside.norm());
    }
    Ok(())
}
