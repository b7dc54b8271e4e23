//! Fit the sup-norm error of the interpolant against the refinement level.

use daubechies::accuracy::convergence_study;
use daubechies::dyadic::{error_model, FunctionKind};
use daubechies::EvaluatorOptions;

fn main() -> daubechies::Result<()> {
    for p in [3, 5, 8] {
        let fit = convergence_study::<f64>(p, FunctionKind::Scaling, (4, 10), 6, &EvaluatorOptions::default())?;
        let (a, b) = error_model(p)?;
        println!("p = {p} ({})", fit.interpolator.name());
        for (j, e) in &fit.samples {
            println!("  j = {j:>2}  log2 error {e:>8.3}");
        }
        println!("  fit {:.3} {:+.3} j  (model {a:.3} {b:+.3} j), rms {:.3}", fit.intercept, fit.slope, fit.residual);
    }
    Ok(())
}
