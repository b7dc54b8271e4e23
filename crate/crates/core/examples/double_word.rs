//! Double-word arithmetic: the extended type used for grids and references.

use daubechies::real::DoubleF64;
use daubechies::{make_scaling, Mode};

fn main() -> daubechies::Result<()> {
    let third = DoubleF64::from_f64(1.0) / DoubleF64::from_f64(3.0);
    println!("1/3 = {:e} + {:e}", third.hi, third.lo);
    let two = DoubleF64::from_f64(2.0).sqrt();
    println!("sqrt(2)² - 2 = {:e}", (two * two - DoubleF64::from_f64(2.0)).to_f64());

    let phi = make_scaling::<DoubleF64>(5, Some(16), Mode::Absolute)?;
    let v = phi.value(DoubleF64::from_f64(1.1));
    println!("phi_5(1.1) = {:.17e} + {:e}", v.hi, v.lo);
    Ok(())
}
