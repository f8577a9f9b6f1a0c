//! The canonical system attached to the family (A_a, B_a): the Hamiltonian
//! m(a) from the boundary data μ(a), the first-order evolution in a, the
//! direct Mellin route to (A_a, B_a), the Schrödinger pair V^±, and zero
//! counting for A^ω.
//!
//! m(a) carries two sources: exp ∫ μ(b) db/b from the marched boundary
//! system, and the ratio det(1+H_a)/det(1-H_a) of Fredholm determinants.
//! The determinant source is only defined while the spectrum of the
//! truncated operator keeps a double-precision-resolvable gap to ±1; the
//! curve records per-sample certification and an overall reliability
//! horizon for the march (estimated by step-refinement disagreement).

mod direct;
mod evolve;
mod potentials;
mod zeros;

pub use direct::{ab_below_one, direct_ab};
pub use evolve::{evolve, CanonicalState, StepControl};
pub use potentials::{potentials, schrodinger_residual, PotentialSample};
pub use zeros::{count_zeros_contour, interlacing_ok, zeros_of_a, zeros_of_b};

use crate::error::{Error, Result};
use crate::kernel::KernelContext;
use crate::operator::{
    self, build_grid, discretize, evolve_phi, richardson_combine, PhiEvolution, PhiProfile,
};

/// Which m(a) source backs an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MSource {
    DeterminantRatio,
    ExpIntegral,
}

/// One determinant-ratio sample of m(a).
#[derive(Debug, Clone, Copy)]
pub struct DetSample {
    pub a: f64,
    pub det_plus: f64,
    pub det_minus: f64,
    /// log(det+/det-) at two grid refinements agreed to the stated slack.
    pub certified: bool,
    pub log_ratio: f64,
}

/// Hamiltonian data on [1, a_max]: dense μ samples, cumulative log m, and
/// determinant-ratio cross samples.
#[derive(Debug, Clone)]
pub struct MCurve {
    pub omega: f64,
    pub a_max: f64,
    evolution: PhiEvolution,
    /// Profile snapshots taken during the march.
    pub profiles: Vec<PhiProfile>,
    pub det_samples: Vec<DetSample>,
    /// First a at which coarse and fine marches disagree materially; the
    /// curve is reliable strictly below this.
    pub horizon: f64,
}

/// March resolution for the shared curve.
#[derive(Debug, Clone, Copy)]
pub struct MCurveSpec {
    pub steps_per_unit: usize,
    pub eta_max: f64,
    /// Spacing of determinant cross-samples.
    pub det_sample_step: f64,
}

impl Default for MCurveSpec {
    fn default() -> Self {
        MCurveSpec {
            steps_per_unit: 8000,
            eta_max: 5.4,
            det_sample_step: 0.1,
        }
    }
}

/// Build the curve: march the boundary system, estimate the reliability
/// horizon by comparing against a half-resolution march, and take
/// determinant-ratio samples with refinement certification.
pub fn m_curve(
    ctx: &KernelContext,
    a_max: f64,
    spec: MCurveSpec,
    profile_targets: &[f64],
) -> Result<MCurve> {
    if ctx.omega() <= 1.0 {
        return Err(Error::Regime(format!(
            "canonical pipeline needs omega > 1, got {}",
            ctx.omega()
        )));
    }
    // snapshot times must coincide for the two marches: round each target up
    // to a coarse-march step time
    let d_alpha_coarse = 2.0 / spec.steps_per_unit as f64;
    let aligned: Vec<f64> = profile_targets
        .iter()
        .map(|a| ((a.ln() / d_alpha_coarse).ceil() * d_alpha_coarse).exp())
        .collect();
    let fine = evolve_phi(ctx, a_max, spec.eta_max, spec.steps_per_unit, &aligned)?;
    let coarse = evolve_phi(ctx, a_max, spec.eta_max, spec.steps_per_unit / 2, &aligned)?;

    // horizon: first a where the two resolutions drift apart or go non-finite
    let mut horizon = a_max;
    let mut probe = 1.02;
    while probe <= a_max {
        let f = fine.mu_at(probe);
        let c = coarse.mu_at(probe);
        if !f.is_finite() || !c.is_finite() || (f - c).abs() > 0.05 * (1.0 + f.abs()) {
            horizon = probe;
            break;
        }
        probe += 0.01;
    }

    let mut det_samples = Vec::new();
    let mut a = 1.0 + spec.det_sample_step;
    while a <= a_max + 1e-12 {
        det_samples.push(det_sample(ctx, a));
        a += spec.det_sample_step;
    }

    // remove the leading Hölder-start error of the march
    let combined = richardson_combine(&fine, &coarse, 1.5);
    Ok(MCurve {
        omega: ctx.omega(),
        a_max,
        profiles: combined.snapshots.clone(),
        evolution: combined,
        det_samples,
        horizon,
    })
}

fn det_sample(ctx: &KernelContext, a: f64) -> DetSample {
    // finer refinement pair inside the resolvable window, where the extra
    // cost is small and the certification is meaningful
    let refinements = if a <= 1.5 { [1u32, 2] } else { [0u32, 1] };
    let mut values = Vec::new();
    for r in refinements {
        let result =
            discretize(ctx, &build_grid(a, 16, r)).and_then(|op| operator::det_pair(ctx, &op));
        values.push(result);
    }
    match (&values[0], &values[1]) {
        (Ok((p0, m0)), Ok((p1, m1))) => {
            let lr0 = (p0 / m0).ln();
            let lr1 = (p1 / m1).ln();
            DetSample {
                a,
                det_plus: *p1,
                det_minus: *m1,
                certified: (lr0 - lr1).abs() < 5e-3 * (1.0 + lr1.abs()),
                log_ratio: lr1,
            }
        }
        _ => DetSample {
            a,
            det_plus: f64::NAN,
            det_minus: f64::NAN,
            certified: false,
            log_ratio: f64::NAN,
        },
    }
}

impl MCurve {
    /// μ(a) from the dense march samples.
    pub fn mu(&self, a: f64) -> f64 {
        if a <= 1.0 {
            return 0.0;
        }
        self.evolution.mu_at(a)
    }

    /// log m(a) = ∫_1^a μ(b) db/b.
    pub fn log_m(&self, a: f64) -> f64 {
        if a <= 1.0 {
            return 0.0;
        }
        self.evolution.log_m(a)
    }

    /// m(a) from the exp-integral source.
    pub fn m(&self, a: f64) -> f64 {
        self.log_m(a).exp()
    }

    /// The profile snapshot closest to `a`, if one was requested nearby.
    pub fn profile_at(&self, a: f64) -> Option<&PhiProfile> {
        self.profiles
            .iter()
            .min_by(|p, q| (p.a - a).abs().partial_cmp(&(q.a - a).abs()).unwrap())
            .filter(|p| (p.a - a).abs() < 1e-3 * a)
    }

    /// Worst relative disagreement between the two m sources over the
    /// certified determinant samples, with the number of certified samples.
    pub fn source_agreement(&self) -> (f64, usize) {
        let mut worst = 0.0f64;
        let mut count = 0usize;
        for s in &self.det_samples {
            if s.certified {
                let exp_int = self.log_m(s.a);
                let rel = (s.log_ratio - exp_int).abs() / exp_int.abs().max(1e-2);
                worst = worst.max(rel);
                count += 1;
            }
        }
        (worst, count)
    }
}

/// (A_a, B_a) at a = 1: the pair (A^ω, B^ω) itself.
pub fn ab_initial(
    z: crate::Complex64,
    omega: f64,
) -> Result<(crate::Complex64, crate::Complex64)> {
    crate::specfun::ab_omega(z, omega)
}
