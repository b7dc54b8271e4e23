use std::fs;
use std::process::{Command, Output};

use daubechies::dyadic::{build_scaling_grid, GridOptions};
use daubechies::io::GridFile;
use daubechies::real::DoubleF64;
use daubechies::transforms::WaveletCoefficientSet;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_daubechies"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn status(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn eval_prints_a_round_trippable_value() {
    let o = run(&["eval", "--p", "8", "--x", "0.25"]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    let phi = daubechies::ScalingEvaluator::<f64>::new(8).unwrap();
    assert_eq!(v.to_bits(), phi.value(0.25).to_bits());
}

#[test]
fn eval_outside_the_support_is_zero() {
    let o = run(&["eval", "--p", "8", "--x", "-1"]);
    assert_eq!(status(&o), 0);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn eval_rejects_unavailable_derivatives() {
    let o = run(&["eval", "--p", "2", "--x", "0.5", "--derivative", "2"]);
    assert_eq!(status(&o), 2);
    let err = stderr(&o);
    assert!(err.starts_with("error[unsupported-derivative]"), "{err}");
    assert!(err.contains("p = 2"));
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn bad_flags_exit_with_usage_status() {
    assert_eq!(status(&run(&["eval", "--p", "20", "--x", "1"])), 2);
    assert_eq!(status(&run(&["eval", "--p", "3"])), 2);
    assert_eq!(status(&run(&["eval", "--p", "3", "--x", "1", "--mode", "sloppy"])), 2);
}

#[test]
fn grid_csv_has_the_documented_length() {
    let o = run(&["grid", "--p", "3", "--refinement", "8"]);
    assert_eq!(status(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,value"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (x, v) = l.split_once(',').unwrap();
            (x.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 5 * 256 + 1);
    assert!(rows.windows(2).all(|w| w[0].0 < w[1].0));
}

#[test]
fn grid_binary_matches_the_library_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi.bin");
    let o = run(&["grid", "--p", "4", "--refinement", "6", "--derivative", "1", "--format", "bin", "--out", path.to_str().unwrap()]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let file = GridFile::read_binary(fs::File::open(&path).unwrap()).unwrap();
    let grid = build_scaling_grid::<DoubleF64>(4, 6, 1, &GridOptions::default()).unwrap();
    assert_eq!(file, GridFile::from_grid(&grid));
}

#[test]
fn grid_rejects_derivatives_beyond_the_capability() {
    let o = run(&["grid", "--p", "4", "--refinement", "3", "--derivative", "3"]);
    assert_eq!(status(&o), 3);
    assert!(stderr(&o).starts_with("error[derivative-unavailable]"));
}

#[test]
fn grid_respects_the_budget() {
    let o = run(&["grid", "--p", "19", "--refinement", "30", "--budget-mib", "1"]);
    assert_eq!(status(&o), 3);
    assert!(stderr(&o).starts_with("error[budget-exceeded]"));
}

fn summary_value(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .parse()
        .unwrap()
}

#[test]
fn convergence_reports_the_linear_rate() {
    let o = run(&["convergence", "--p", "3", "--j-min", "4", "--j-max", "10"]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let csv = stdout(&o);
    assert!(csv.starts_with("j,log2_sup_error\n"));
    assert_eq!(csv.lines().count(), 8);
    let summary = stderr(&o);
    assert!(summary.contains("interpolator: linear"));
    let slope = summary_value(&summary, "slope");
    assert!((slope + 1.08).abs() <= 0.1, "{slope}");
}

#[test]
fn convergence_needs_four_levels() {
    let o = run(&["convergence", "--p", "3", "--j-min", "4", "--j-max", "6"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn ulp_rejects_zero_samples() {
    let o = run(&["ulp", "--p", "8", "--samples", "0"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn ulp_at_low_refinement_is_far_from_one_ulp() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("summary.txt");
    let o = run(&[
        "ulp", "--p", "8", "--refinement", "8", "--precision", "f64", "--samples", "20000", "--seed", "3",
        "--summary", summary.to_str().unwrap(),
    ]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let csv = stdout(&o);
    assert!(csv.starts_with("x,ulps,cond,flag\n"));
    assert_eq!(csv.lines().count(), 20_001);
    let text = fs::read_to_string(summary).unwrap();
    assert!(summary_value(&text, "median_ulp_wellcond") > 10.0, "{text}");
}

#[test]
fn ulp_output_is_deterministic() {
    let args = ["ulp", "--p", "5", "--refinement", "6", "--samples", "2000", "--seed", "9"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(status(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}

#[test]
fn cwt_of_a_constant_vanishes() {
    let o = run(&["cwt", "--p", "8", "--function", "const:1", "--s", "0.5", "3", "3", "--t", "-2", "2", "3", "--tol", "1e-9"]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,t,W"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r[2].abs() <= 1e-8), "{text}");
    assert!(rows.windows(2).all(|w| (w[0][0], w[0][1]) < (w[1][0], w[1][1])));
}

#[test]
fn cwt_of_the_oscillatory_example_is_finite() {
    let o = run(&["cwt", "--p", "8", "--function", "sin_recip:1.3", "--s", "2.0", "2.0", "1", "--t", "1.5", "1.5", "1"]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    let w: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
    assert!(w.is_finite());
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn cwt_rejects_zero_scale() {
    let o = run(&["cwt", "--p", "8", "--function", "const:1", "--s", "-1", "1", "3", "--t", "0", "0", "1"]);
    assert_eq!(status(&o), 2);
    assert!(stderr(&o).starts_with("error[domain]"));
}

#[test]
fn cwt_rejects_unknown_functions() {
    let o = run(&["cwt", "--p", "8", "--function", "cosh", "--s", "1", "1", "1", "--t", "0", "0", "1"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn expand_then_reconstruct_bumps() {
    let dir = tempfile::tempdir().unwrap();
    let coeffs = dir.path().join("bumps.csv");
    let o = run(&[
        "expand", "--p", "3", "--function", "bumps", "--j-min", "-6", "--j-max", "0", "--tau", "1e-3",
        "--out", coeffs.to_str().unwrap(),
    ]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let set = WaveletCoefficientSet::read_from(fs::read(&coeffs).unwrap().as_slice()).unwrap();
    assert_eq!((set.p, set.j_min, set.j_max, set.tau), (3, -6, 0, 1e-3));
    assert!(set.iter().all(|(_, c)| c.abs() > 1e-3));

    let o = run(&["reconstruct", "--coefficients", coeffs.to_str().unwrap(), "--samples", "101"]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 102);
    let phi = daubechies::ScalingEvaluator::<f64>::new(3).unwrap();
    let psi = daubechies::WaveletEvaluator::<f64>::new(3).unwrap();
    for line in text.lines().skip(1) {
        let (x, v) = line.split_once(',').unwrap();
        let (x, v): (f64, f64) = (x.parse().unwrap(), v.parse().unwrap());
        assert_eq!(v.to_bits(), set.eval(&phi, &psi, x).to_bits());
    }
}

#[test]
fn expand_can_choose_the_sparsest_order() {
    let o = run(&[
        "expand", "--p", "2", "--p-max", "3", "--function", "poly:0,1", "--interval", "0", "1",
        "--j-min", "-3", "--tau", "1e-4",
    ]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    assert_eq!(stderr(&o).lines().filter(|l| l.contains("Hoyer sparsity")).count(), 2);
    assert!(stdout(&o).starts_with("p,j_min,j_max,tau\n"));
}

#[test]
fn expand_needs_an_interval_for_unbounded_functions() {
    let o = run(&["expand", "--p", "3", "--function", "const:1", "--j-min", "-2"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn reconstruct_of_an_empty_file_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    fs::write(&path, "").unwrap();
    let o = run(&["reconstruct", "--coefficients", path.to_str().unwrap(), "--samples", "5"]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    let values: Vec<&str> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(values, ["0"; 5]);
}

#[test]
fn reconstruct_reports_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, "p,j_min,j_max,tau\n3,-2,0\n").unwrap();
    let o = run(&["reconstruct", "--coefficients", path.to_str().unwrap()]);
    assert_eq!(status(&o), 2);
    assert!(stderr(&o).starts_with("error[format]"));
}

#[test]
fn defaults_show_is_json() {
    let o = run(&["defaults", "show"]);
    assert_eq!(status(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ulp_f32"].as_array().unwrap().len(), 18);
    assert_eq!(v["ulp_f32"][6], 12);
}
