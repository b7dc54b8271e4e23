//! Measure errors in ULPs against a double-word reference.

use daubechies::accuracy::{reference_evaluator, ulp_report, SampleSpec, UlpFlag};
use daubechies::dyadic::DEFAULT_BUDGET_BYTES;
use daubechies::{make_scaling, Mode};

fn main() -> daubechies::Result<()> {
    let phi = make_scaling::<f32>(8, None, Mode::Ulp)?;
    let reference = reference_evaluator(&phi, DEFAULT_BUDGET_BYTES)?;
    let report = ulp_report(&phi, &reference, &SampleSpec::uniform(20_000, 7), 1e3)?;
    let s = &report.summary;
    println!("f32, p = 8, j = {}: {s:#?}", phi.refinement());

    let worst = report
        .records
        .iter()
        .filter(|r| r.flag == UlpFlag::Ok && r.cond <= s.cond_threshold)
        .map(|r| (r.ulps.abs(), r.x))
        .fold((0.0, 0.0), |a, b| if b.0 > a.0 { b } else { a });
    println!("largest well-conditioned error {:.2} ulp at x = {}", worst.0, worst.1);
    Ok(())
}
