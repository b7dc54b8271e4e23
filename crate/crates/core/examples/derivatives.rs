//! Which derivatives each order supports, and what asking for too many does.

use daubechies::dyadic::{holder_exponent, max_derivative};
use daubechies::interpolators::InterpolatorKind;
use daubechies::{Mode, ScalingEvaluator};

fn main() -> daubechies::Result<()> {
    println!("{:>3} {:>8} {:>10} {:>12}", "p", "holder", "max deriv", "interpolant");
    for p in 2..=19 {
        println!(
            "{p:>3} {:>8.3} {:>10} {:>12}",
            holder_exponent(p)?,
            max_derivative(p)?,
            InterpolatorKind::best_for(p)?.name()
        );
    }

    let phi = daubechies::make_scaling::<f64>(10, None, Mode::Absolute)?;
    let x = 3.3;
    println!("p = 10 at x = {x}: {} {} {}", phi.value(x), phi.prime(x)?, phi.double_prime(x)?);

    let rough = ScalingEvaluator::<f64>::new(2)?;
    match rough.derivative(2, 0.5) {
        Ok(v) => println!("unexpected: {v}"),
        Err(e) => println!("p = 2, second derivative: {e}"),
    }
    Ok(())
}
