//! The adaptive trapezoid and bisection quadratures on their own.

use daubechies::transforms::{adaptive_bisection, adaptive_trapezoid, integrate_piecewise, BisectionOptions, QuadOptions};

fn main() -> daubechies::Result<()> {
    let opts = QuadOptions::new(1e-12);
    let q = adaptive_trapezoid(|x: f64| (-x * x).exp(), -6.0, 6.0, &opts)?;
    println!("∫ exp(-x²) = {:.15} (sqrt(pi) = {:.15}), {} evaluations", q.value, std::f64::consts::PI.sqrt(), q.evaluations);

    let kink = |x: f64| (x - 0.3).abs();
    let q = integrate_piecewise(kink, 0.0, 1.0, &[0.3], &QuadOptions::new(1e-10))?;
    println!("∫ |x - 0.3| on [0, 1] = {:.12} (exact 0.29)", q.value);

    let g = |x: f64| if x == 0.0 { 0.0 } else { x * (1.0 / x).sin() };
    let q = adaptive_bisection(g, 0.0, 1.0, &BisectionOptions::new(1e-10, 1.0))?;
    println!("∫ x sin(1/x) on [0, 1] = {:.12} ± {:.1e}", q.value, q.error);
    Ok(())
}
