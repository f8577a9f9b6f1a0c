//! Real zeros of A^ω, the contour cross-count, and interlacing with B^ω.

use xi_canonical::canonical::{count_zeros_contour, interlacing_ok, zeros_of_a, zeros_of_b};

fn main() -> xi_canonical::Result<()> {
    let omega = 1.5;
    let t_max = 30.0;
    let za = zeros_of_a(omega, t_max)?;
    let zb = zeros_of_b(omega, t_max)?;
    let contour = count_zeros_contour(omega, t_max, 1.0)?;
    println!("zeros of A^ω in [0, {t_max}]: {za:.6?}");
    println!("zeros of B^ω in (0, {t_max}]: {zb:.6?}");
    println!("contour count: {contour} (bracketed {})", za.len());
    println!("interlacing: {}", interlacing_ok(&za, &zb));
    Ok(())
}
