//! Continuous wavelet transform of an oscillatory signal.

use daubechies::transforms::{cwt, scalogram, NamedFunction};
use daubechies::WaveletEvaluator;

fn main() -> daubechies::Result<()> {
    let psi = WaveletEvaluator::<f64>::new(8)?;
    let f = NamedFunction::SinRecip(1.3);
    let w = cwt(|x| f.eval(x), &psi, 2.0, 1.5, 1e-8)?;
    println!("W(2, 1.5) of {f} = {w:.12}");

    let scales = (1..=8).map(|i| 0.25 * i as f64).collect::<Vec<_>>();
    let translates = (0..9).map(|i| -2.0 + 0.5 * i as f64).collect::<Vec<_>>();
    let rows = scalogram(|x| f.eval(x), &psi, &scales, &translates, 1e-6)?;
    println!("s,t,W");
    for r in rows {
        println!("{},{},{:.6e}", r.s, r.t, r.w);
    }
    Ok(())
}
