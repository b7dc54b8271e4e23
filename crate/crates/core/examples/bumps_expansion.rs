//! Expand the bumps signal, threshold it, score sparsity and reconstruct.

use daubechies::transforms::{bumps, bumps_breakpoints, expansion_coefficients, hoyer_sparsity, ExpansionSpec};
use daubechies::{ScalingEvaluator, WaveletEvaluator};

fn main() -> daubechies::Result<()> {
    let p = 3;
    let phi = ScalingEvaluator::<f64>::new(p)?;
    let psi = WaveletEvaluator::<f64>::new(p)?;
    let mut spec = ExpansionSpec::new(p, -8, 0, (0.0, 1.0));
    spec.breakpoints = bumps_breakpoints();

    let full = expansion_coefficients(bumps, &phi, &psi, &spec)?;
    let values: Vec<f64> = full.values();
    println!("{} coefficients, Hoyer sparsity {:.3}", full.len(), hoyer_sparsity(&values)?);
    if !full.unconverged.is_empty() {
        println!("{} quadratures did not converge", full.unconverged.len());
    }

    for tau in [1e-4, 1e-3, 1e-2] {
        let kept = full.clone().threshold(tau);
        let err = (0..=1000)
            .map(|i| i as f64 / 1000.0)
            .map(|x| (kept.eval(&phi, &psi, x) - full.eval(&phi, &psi, x)).abs())
            .fold(0.0, f64::max);
        println!("tau = {tau:e}: keep {:>5}, sup change {err:.3e}", kept.len());
    }

    let mut out = Vec::new();
    full.clone().threshold(1e-3).write_to(&mut out)?;
    println!("coefficient file: {} bytes", out.len());
    Ok(())
}
