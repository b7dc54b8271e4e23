//! The refinement tables behind `refinement: None`.

use daubechies::defaults::{default_refinement, DefaultsTable};
use daubechies::real::DoubleF64;
use daubechies::Mode;

fn main() -> daubechies::Result<()> {
    let t = DefaultsTable::embedded();
    println!("{:>3} {:>9} {:>8} {:>8} {:>8}", "p", "absolute", "ulp f32", "ulp f64", "ulp dd");
    for p in 2..=19u32 {
        let i = (p - 2) as usize;
        println!(
            "{p:>3} {:>9} {:>8} {:>8} {:>8}",
            t.absolute[i],
            t.ulp_f32[i],
            t.ulp_f64[i],
            default_refinement::<DoubleF64>(p, Mode::Ulp)?
        );
    }
    print!("{}", t.to_rust());
    Ok(())
}
