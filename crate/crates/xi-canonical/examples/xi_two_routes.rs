//! The completed zeta function through its product formula and through the
//! folded theta-series integral, as mutual oracles.

use num_complex::Complex64;
use xi_canonical::specfun;

fn main() -> xi_canonical::Result<()> {
    for &(re, im) in &[(0.5, 0.0), (2.0, 0.0), (0.5, 14.0), (-3.0, 7.5), (6.0, -21.0)] {
        let s = Complex64::new(re, im);
        let product = specfun::xi(s)?;
        let integral = specfun::xi_theta_series(s);
        let sym = specfun::xi(Complex64::new(1.0, 0.0) - s)?;
        println!(
            "s = {re:5}+{im:5}i   xi = {product:.12}   routes differ by {:.2e}   xi(1-s) differs by {:.2e}",
            (product - integral).norm() / integral.norm(),
            (product - sym).norm() / product.norm(),
        );
    }
    Ok(())
}
