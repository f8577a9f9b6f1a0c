use std::time::Instant;
use xi_canonical::kernel::KernelContext;

fn main() {
    let t0 = Instant::now();
    let ctx = KernelContext::with_proxy(1.5, 512, 1e-10, 420.0).unwrap();
    println!("proxy build: {:?}", t0.elapsed());
    let plain = KernelContext::new(1.5, 512, 1e-10).unwrap();
    let mut worst = 0.0f64;
    for k in 0..4000 {
        let x = 1.0 + 400.0 * (k as f64 + 0.5) / 4000.0;
        let a = ctx.h(x).unwrap();
        let b = plain.h(x).unwrap();
        worst = worst.max((a - b).abs());
    }
    println!("worst |proxy - direct| = {worst:.3e}");
    let t1 = Instant::now();
    let mut acc = 0.0;
    for k in 0..200000 {
        let x = 1.001 + 400.0 * (k as f64) / 200000.0;
        acc += ctx.h(x).unwrap();
    }
    println!("200k proxied evals: {:?} (acc {acc:.3})", t1.elapsed());
}
