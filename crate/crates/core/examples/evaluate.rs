//! Evaluate φ and ψ and their derivatives at a few points.

use daubechies::{make_scaling, make_wavelet, Mode};

fn main() -> daubechies::Result<()> {
    let p = 6;
    let phi = make_scaling::<f64>(p, None, Mode::Ulp)?;
    let psi = make_wavelet::<f64>(p, None, Mode::Ulp)?;
    println!(
        "p = {p}: refinement {}, {} interpolant, support {:?}",
        phi.refinement(),
        phi.interpolator().name(),
        phi.support()
    );
    println!("{:>6} {:>22} {:>22} {:>22}", "x", "phi", "phi'", "psi");
    for i in 0..=10 {
        let x = 0.5 * i as f64;
        println!("{x:>6} {:>22.15e} {:>22.15e} {:>22.15e}", phi.value(x), phi.prime(x)?, psi.value(x));
    }

    // Single precision uses its own refinement table.
    let phi32 = make_scaling::<f32>(p, None, Mode::Ulp)?;
    println!("f32 refinement {}, phi(1.25) = {}", phi32.refinement(), phi32.value(1.25));
    Ok(())
}
