//! Command-line harness over the library: kernel tables, determinants, the
//! m-curve, canonical-system evolution, potentials, zero counting and the
//! verification battery.

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::path::PathBuf;
use std::process::ExitCode;
use xi_canonical::canonical::{
    self, evolve, m_curve, potentials, zeros_of_a, zeros_of_b, MCurveSpec, StepControl,
};
use xi_canonical::kernel::KernelContext;
use xi_canonical::operator::{build_grid, discretize, solve_phi};
use xi_canonical::report::Table;
use xi_canonical::specfun;
use xi_canonical::verify::{format_report_line, run_suite, RunConfig};
use xi_canonical::{Error, Result};

const BUILD_ID: &str = match option_env!("GIT_DESCRIBE") {
    Some(v) => v,
    None => env!("CARGO_PKG_VERSION"),
};

#[derive(Parser)]
#[command(name = "xi-canonical", version, about = "Integral operators, Fredholm determinants and canonical systems for the Riemann xi family")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Structure parameter ω.
    #[arg(long, global = true, default_value_t = 1.5)]
    omega: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized sample points.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    /// Permit a beyond the desk-scale guard of 4.
    #[arg(long, global = true)]
    allow_large_a: bool,

    /// Also emit a gnuplot companion script next to the CSV.
    #[arg(long, global = true)]
    plot: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate Θ_ω on a segment of the real line.
    Theta {
        /// Sampling grid u0:u1:n.
        #[arg(long, default_value = "-20:20:201", allow_hyphen_values = true)]
        grid: String,
    },
    /// Tabulate one of the arithmetic kernels.
    Kernel {
        /// Sampling grid a:b:n.
        #[arg(long, default_value = "0.01:5:300")]
        grid: String,
        /// Which kernel to tabulate.
        #[arg(long, value_parser = ["g", "h", "g1", "h1"], default_value = "h")]
        function: String,
    },
    /// Determinants, spectral radius and μ along an a-grid.
    Det {
        /// a-grid a0:a1:n.
        #[arg(long = "a-grid", default_value = "1.05:1.6:12")]
        a_grid: String,
    },
    /// The Hamiltonian curve: μ(a), m(a) from both sources.
    Mcurve {
        #[arg(long = "a-max", default_value_t = 1.6)]
        a_max: f64,
    },
    /// Evolve (A_a, B_a) for one z across the curve range.
    Evolve {
        /// Complex z as re,im.
        #[arg(long, default_value = "2,0", allow_hyphen_values = true)]
        z: String,
        #[arg(long = "a-max", default_value_t = 1.5)]
        a_max: f64,
    },
    /// Schrödinger potentials V± along the curve.
    Potentials {
        #[arg(long = "a-max", default_value_t = 1.5)]
        a_max: f64,
    },
    /// Real zeros of A^ω with the argument-principle cross count.
    Zeros {
        #[arg(long, default_value_t = 30.0)]
        tmax: f64,
    },
    /// Run the verification battery.
    Verify {
        /// Steps per unit for the high-resolution march.
        #[arg(long, default_value_t = 64000)]
        march: usize,
    },
}

fn parse_grid(spec: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Config(format!("grid must be a:b:n, got {spec}")));
    }
    let a: f64 = parts[0].parse().map_err(|e| Error::Config(format!("{e}")))?;
    let b: f64 = parts[1].parse().map_err(|e| Error::Config(format!("{e}")))?;
    let n: usize = parts[2].parse().map_err(|e| Error::Config(format!("{e}")))?;
    if n < 1 || b <= a {
        return Err(Error::Config(format!("bad grid {spec}")));
    }
    Ok((a, b, n))
}

fn parse_z(spec: &str) -> Result<Complex64> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Config(format!("z must be re,im, got {spec}")));
    }
    Ok(Complex64::new(
        parts[0].trim().parse().map_err(|e| Error::Config(format!("{e}")))?,
        parts[1].trim().parse().map_err(|e| Error::Config(format!("{e}")))?,
    ))
}

fn emit(cli: &Cli, table: Table) -> Result<()> {
    match (&cli.out, cli.format) {
        (Some(path), Format::Csv) => {
            table.write_csv(path)?;
            if cli.plot {
                let cols: Vec<&str> = table.columns[1..].iter().map(|s| s.as_str()).collect();
                table.write_plot_script(path, &cols)?;
            }
        }
        (Some(path), Format::Json) => table.write_json(path)?,
        (None, Format::Csv) => print!("{}", table.to_csv()),
        (None, Format::Json) => println!(
            "{}",
            serde_json::to_string_pretty(&table).map_err(|e| Error::Io(e.to_string()))?
        ),
    }
    Ok(())
}

fn meta(cli: &Cli, extra: &str) -> String {
    format!(
        "omega={} seed={} build={} {}",
        cli.omega, cli.seed, BUILD_ID, extra
    )
}

fn guard_a(cli: &Cli, a: f64) -> Result<()> {
    if a > 4.0 && !cli.allow_large_a {
        return Err(Error::Config(format!(
            "a = {a} beyond the desk-scale guard of 4; pass --allow-large-a to override"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Theta { grid } => {
            let (u0, u1, n) = parse_grid(grid)?;
            let mut t = Table::new(meta(cli, &format!("grid={grid}")), &["u", "re_theta", "im_theta", "abs_theta"]);
            for k in 0..n {
                let u = u0 + (u1 - u0) * k as f64 / (n - 1).max(1) as f64;
                let v = specfun::theta_omega(Complex64::new(u, 0.0), cli.omega)?;
                t.push(vec![u, v.re, v.im, v.norm()]);
            }
            emit(cli, t)
        }
        Command::Kernel { grid, function } => {
            let (x0, x1, n) = parse_grid(grid)?;
            let ctx = KernelContext::new(cli.omega, (x1.ceil() as usize + 2).max(64), 1e-10)?;
            let mut t = Table::new(
                meta(cli, &format!("grid={grid} function={function}")),
                &["x", "value"],
            );
            for k in 0..n {
                let x = x0 + (x1 - x0) * k as f64 / (n - 1).max(1) as f64;
                let v = match function.as_str() {
                    "g" => ctx.g(x),
                    "h" => ctx.h(x),
                    "g1" => ctx.g1(x),
                    "h1" => ctx.h1(x),
                    other => return Err(Error::Config(format!("unknown kernel {other}"))),
                };
                match v {
                    Ok(v) => t.push(vec![x, v]),
                    Err(Error::Domain(_)) => t.push(vec![x, f64::NAN]),
                    Err(e) => return Err(e),
                }
            }
            emit(cli, t)
        }
        Command::Det { a_grid } => {
            let (a0, a1, n) = parse_grid(a_grid)?;
            guard_a(cli, a1)?;
            let ctx = KernelContext::new(cli.omega, ((a1 * a1).ceil() as usize + 2).max(64), 1e-10)?;
            let mut t = Table::new(
                meta(cli, &format!("a-grid={a_grid}")),
                &["a", "det_plus", "det_minus", "m", "mu", "spec_radius"],
            );
            for k in 0..n {
                let a = a0 + (a1 - a0) * k as f64 / (n - 1).max(1) as f64;
                let op = discretize(&ctx, &build_grid(a, 16, 1))?;
                let rho = op.spectral_radius();
                let f = op.factorize(Some(&ctx))?;
                let (dp, dm, m) = match f.det_pair() {
                    Ok((dp, dm)) => (dp, dm, dp / dm),
                    Err(_) => (f64::NAN, f64::NAN, f64::NAN),
                };
                let mu = if a <= 1.0 {
                    0.0
                } else {
                    match (solve_phi(&ctx, &f, 1.0), solve_phi(&ctx, &f, -1.0)) {
                        (Ok(p), Ok(q)) => {
                            a * (p.at_boundary(&ctx)? + q.at_boundary(&ctx)?)
                        }
                        _ => f64::NAN,
                    }
                };
                t.push(vec![a, dp, dm, m, mu, rho]);
            }
            emit(cli, t)
        }
        Command::Mcurve { a_max } => {
            guard_a(cli, *a_max)?;
            let ctx = KernelContext::new(cli.omega, 4096, 1e-10)?;
            let curve = m_curve(&ctx, *a_max, MCurveSpec::default(), &[])?;
            let mut t = Table::new(
                meta(cli, &format!("a-max={a_max} horizon={}", curve.horizon)),
                &["a", "mu", "m_exp_integral", "m_det_ratio", "det_certified"],
            );
            let mut a = 1.0;
            while a <= *a_max + 1e-9 {
                let det = curve
                    .det_samples
                    .iter()
                    .find(|s| (s.a - a).abs() < 1e-9);
                let (m_det, cert) = match det {
                    Some(s) if s.log_ratio.is_finite() => {
                        (s.log_ratio.exp(), if s.certified { 1.0 } else { 0.0 })
                    }
                    _ => (f64::NAN, 0.0),
                };
                t.push(vec![a, curve.mu(a), curve.m(a), m_det, cert]);
                a += 0.05;
            }
            emit(cli, t)
        }
        Command::Evolve { z, a_max } => {
            guard_a(cli, *a_max)?;
            let z = parse_z(z)?;
            let ctx = KernelContext::new(cli.omega, 4096, 1e-10)?;
            let curve = m_curve(&ctx, *a_max, MCurveSpec::default(), &[])?;
            let mut t = Table::new(
                meta(cli, &format!("z={z} a-max={a_max}")),
                &["a", "re_a_big", "im_a_big", "re_b_big", "im_b_big"],
            );
            let steps = 40;
            for k in 0..=steps {
                let a = 1.0 + (*a_max - 1.0) * k as f64 / steps as f64;
                let st = if a <= 1.0 {
                    canonical::ab_below_one(cli.omega, a.min(1.0), z)?
                } else {
                    evolve(&curve, z, a, StepControl::default())?
                };
                t.push(vec![a, st.a_big.re, st.a_big.im, st.b_big.re, st.b_big.im]);
            }
            emit(cli, t)
        }
        Command::Potentials { a_max } => {
            guard_a(cli, *a_max)?;
            let ctx = KernelContext::new(cli.omega, 4096, 1e-10)?;
            let curve = m_curve(&ctx, *a_max, MCurveSpec::default(), &[])?;
            let samples: Vec<f64> = (0..60)
                .map(|k| 1.01 + (*a_max - 1.02) * k as f64 / 59.0)
                .collect();
            let vals = potentials(&curve, &samples, 1e-3);
            let mut t = Table::new(
                meta(cli, &format!("a-max={a_max}")),
                &["a", "m", "v_plus", "v_minus"],
            );
            for v in vals {
                t.push(vec![v.a, v.m, v.v_plus, v.v_minus]);
            }
            emit(cli, t)
        }
        Command::Zeros { tmax } => {
            let za = zeros_of_a(cli.omega, *tmax)?;
            let contour = canonical::count_zeros_contour(cli.omega, *tmax, 1.0)?;
            let zb = zeros_of_b(cli.omega, *tmax)?;
            let inter = canonical::interlacing_ok(&za, &zb);
            let mut t = Table::new(
                meta(
                    cli,
                    &format!(
                        "tmax={tmax} bracketed={} contour={contour} interlace={inter}",
                        za.len()
                    ),
                ),
                &["index", "z_k"],
            );
            for (i, z) in za.iter().enumerate() {
                t.push(vec![(i + 1) as f64, *z]);
            }
            eprintln!(
                "# contour count {contour} vs bracketed {} (interlacing with B zeros: {inter})",
                za.len()
            );
            if contour != za.len() {
                return Err(Error::Contour(format!(
                    "contour count {contour} disagrees with bracketed {}",
                    za.len()
                )));
            }
            emit(cli, t)
        }
        Command::Verify { march } => {
            let config = RunConfig {
                omega: cli.omega,
                seed: cli.seed,
                precision_march: *march,
                ..RunConfig::default()
            };
            let reports = run_suite(config)?;
            let mut failed = false;
            for r in &reports {
                println!("{}", format_report_line(r));
                if r.hard && !r.passed {
                    failed = true;
                }
            }
            if let Some(path) = &cli.out {
                let f = std::fs::File::create(path)?;
                serde_json::to_writer_pretty(f, &reports)
                    .map_err(|e| Error::Io(e.to_string()))?;
            }
            if failed {
                // distinct from config errors (2): some check failed
                std::process::exit(1);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Config(msg)) => {
            eprintln!("config error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
