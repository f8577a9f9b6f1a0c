//! Numerical machinery for the Riemann xi function family A^ω/B^ω: the
//! arithmetic kernels g_ω, h_ω and their once-integrated variants, the
//! Hankel-type integral operator and its truncations, Fredholm determinants,
//! the Hamiltonian m(a) with its canonical system, and the associated pair of
//! Schrödinger potentials — together with a verification suite that exercises
//! every identity the pipeline relies on.
//!
//! Layout:
//! - [`specfun`]: ξ(s), Θ_ω(z), (A^ω, B^ω), log-gamma, zeta.
//! - [`kernel`]: c_ω(n), g_ω, h_ω, g_ω⟨1⟩, h_ω⟨1⟩ and Mellin-transform checks.
//! - [`operator`]: quadrature grids, discretized operators, determinants,
//!   Fredholm series, the integral-equation solve for φ_a^±.
//! - [`canonical`]: m(a), the canonical system evolution, direct route to
//!   (A_a, B_a), Schrödinger potentials V^±, zero counting.
//! - [`verify`]: the named-check battery behind `xi-canonical verify`.
//! - [`report`]: CSV/JSON emission with deterministic formatting.

pub mod canonical;
pub mod error;
pub mod kernel;
pub mod operator;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
