use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use daubechies::accuracy::{
    convergence_study, reference_evaluator, ulp_report, SampleSpec, Summary, DEFAULT_COND_THRESHOLD, DEFAULT_DELTA,
};
use daubechies::defaults::{DefaultsTable, RegenOptions, REFERENCE_BUDGET_BYTES};
use daubechies::dyadic::{build_scaling_grid, build_wavelet_grid, FunctionKind, GridOptions};
use daubechies::interpolators::InterpolatorKind;
use daubechies::io::{format_f64, write_csv, GridFile};
use daubechies::real::{DoubleF64, Target};
use daubechies::transforms::{
    expansion_coefficients, hoyer_sparsity, scalogram, ExpansionSpec, NamedFunction, QuadOptions,
    WaveletCoefficientSet,
};
use daubechies::{Error, Evaluator, EvaluatorOptions, Mode, ScalingEvaluator, WaveletEvaluator};

const EXIT_USAGE: u8 = 2;
const EXIT_CAPABILITY: u8 = 3;
const EXIT_NON_CONVERGENCE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "daubechies", version, about = "Evaluate Daubechies scaling functions and wavelets", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate φ, ψ or a derivative at one abscissa
    Eval(EvalArgs),
    /// Export a dyadic grid as CSV or DWGRID1 binary
    Grid(GridArgs),
    /// Sup-norm convergence study with a log-linear fit
    Convergence(ConvergenceArgs),
    /// ULP error report against a wide-precision reference
    Ulp(UlpArgs),
    /// Continuous wavelet transform scalogram
    Cwt(CwtArgs),
    /// Wavelet expansion coefficients of a named function
    Expand(ExpandArgs),
    /// Sample a thresholded wavelet series from a coefficient file
    Reconstruct(ReconstructArgs),
    /// Show or regenerate the default refinement tables
    Defaults {
        #[command(subcommand)]
        action: DefaultsAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Phi,
    Psi,
}

impl From<Kind> for FunctionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Phi => FunctionKind::Scaling,
            Kind::Psi => FunctionKind::Wavelet,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Precision {
    F32,
    F64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridFormat {
    Csv,
    Bin,
}

/// Flags shared by every subcommand that builds evaluators.
#[derive(Args, Debug, Clone)]
struct EvaluatorFlags {
    /// Grid refinement j (spacing 2^-j); defaults to the mode's table
    #[arg(long)]
    refinement: Option<u32>,
    #[arg(long, default_value_t = Mode::Ulp)]
    mode: Mode,
    /// Override the per-p interpolator
    #[arg(long)]
    interpolator: Option<InterpolatorKind>,
}

impl EvaluatorFlags {
    fn options(&self) -> EvaluatorOptions {
        EvaluatorOptions {
            refinement: self.refinement,
            mode: self.mode,
            interpolator: self.interpolator,
            ..EvaluatorOptions::default()
        }
    }
}

fn order_parser() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(2..=19)
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, value_parser = order_parser())]
    p: u32,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, default_value_t = 0)]
    derivative: u32,
    #[arg(long, value_enum, default_value_t = Kind::Phi)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Precision::F64)]
    precision: Precision,
    #[command(flatten)]
    eval: EvaluatorFlags,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long, value_parser = order_parser())]
    p: u32,
    #[arg(long)]
    refinement: u32,
    #[arg(long, default_value_t = 0)]
    derivative: u32,
    #[arg(long, value_enum, default_value_t = Kind::Phi)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = GridFormat::Csv)]
    format: GridFormat,
    /// Construction budget in MiB
    #[arg(long, default_value_t = 1024)]
    budget_mib: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConvergenceArgs {
    #[arg(long, value_parser = order_parser())]
    p: u32,
    #[arg(long)]
    j_min: u32,
    #[arg(long)]
    j_max: u32,
    #[arg(long, value_enum, default_value_t = Kind::Phi)]
    kind: Kind,
    /// Levels between the finest evaluator and the reference grid
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    delta: u32,
    #[arg(long)]
    interpolator: Option<InterpolatorKind>,
    #[arg(long, value_enum, default_value_t = Precision::F64)]
    precision: Precision,
    /// CSV destination (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Summary destination (stderr when absent)
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct UlpArgs {
    #[arg(long, value_parser = order_parser())]
    p: u32,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_COND_THRESHOLD)]
    cond_threshold: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Kind::Phi)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Precision::F32)]
    precision: Precision,
    #[command(flatten)]
    eval: EvaluatorFlags,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CwtArgs {
    #[arg(long, value_parser = order_parser())]
    p: u32,
    /// bumps, sin_recip:a, const:c or poly:c0,c1,...
    #[arg(long)]
    function: NamedFunction,
    /// Scales: start end count
    #[arg(long, num_args = 3, allow_hyphen_values = true, value_names = ["START", "END", "COUNT"])]
    s: Vec<String>,
    /// Translates: start end count
    #[arg(long, num_args = 3, allow_hyphen_values = true, value_names = ["START", "END", "COUNT"])]
    t: Vec<String>,
    /// Global absolute quadrature tolerance
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[command(flatten)]
    eval: EvaluatorFlags,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long, value_parser = order_parser())]
    p: u32,
    /// Largest order tried; the sparsest thresholded expansion is written
    #[arg(long, value_parser = order_parser())]
    p_max: Option<u32>,
    #[arg(long)]
    function: NamedFunction,
    #[arg(long, allow_hyphen_values = true)]
    j_min: i32,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    j_max: i32,
    #[arg(long, default_value_t = 0.0)]
    tau: f64,
    /// Interval carrying the function (defaults to its support)
    #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["A", "B"])]
    interval: Option<Vec<f64>>,
    /// Relative quadrature tolerance
    #[arg(long, default_value_t = daubechies::transforms::DEFAULT_EXPANSION_TOL)]
    tol: f64,
    #[command(flatten)]
    eval: EvaluatorFlags,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReconstructArgs {
    /// Coefficient file written by `expand`
    #[arg(long)]
    coefficients: PathBuf,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["A", "B"], default_values_t = [0.0, 1.0])]
    interval: Vec<f64>,
    #[command(flatten)]
    eval: EvaluatorFlags,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum DefaultsAction {
    /// Print the embedded tables as JSON
    Show,
    /// Re-measure the f32 ULP table and recompute the model tables
    Regen {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_COND_THRESHOLD)]
        cond_threshold: f64,
        /// JSON destination (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the tables as Rust statics
        #[arg(long)]
        rust: Option<PathBuf>,
    },
}

/// An error plus the exit status it maps to.
struct Failure {
    code: u8,
    tag: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            tag: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, tag) = match &e {
            Error::UnsupportedOrder { .. } => (EXIT_USAGE, "unsupported-order"),
            Error::UnsupportedDerivative { .. } => (EXIT_USAGE, "unsupported-derivative"),
            Error::InvalidArgument(_) => (EXIT_USAGE, "invalid-argument"),
            Error::InsufficientData { .. } => (EXIT_USAGE, "insufficient-data"),
            Error::Format(_) => (EXIT_USAGE, "format"),
            Error::DerivativeUnavailable { .. } => (EXIT_CAPABILITY, "derivative-unavailable"),
            Error::DefectiveEigenproblem { .. } => (EXIT_CAPABILITY, "defective-eigenproblem"),
            Error::BudgetExceeded { .. } => (EXIT_CAPABILITY, "budget-exceeded"),
            Error::NonConvergence { .. } => (EXIT_NON_CONVERGENCE, "non-convergence"),
            Error::Io(_) => (1, "io"),
        };
        Failure {
            code,
            tag,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn open_out(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::from(Error::Io(format!("{}: {e}", p.display()))))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_summary(path: &Option<PathBuf>, summary: &Summary) -> CliResult {
    match path {
        Some(p) => std::fs::write(p, summary.to_text())?,
        None => eprint!("{}", summary.to_text()),
    }
    Ok(())
}

/// `count` evenly spaced values from `start` to `end` inclusive.
fn linspace(start: f64, end: f64, count: usize) -> Vec<f64> {
    match count {
        1 => vec![start],
        _ => (0..count)
            .map(|i| start + (end - start) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}

fn parse_range(flag: &str, raw: &[String]) -> CliResult<Vec<f64>> {
    let bad = || Failure::usage(format!("--{flag} expects START END COUNT, got `{}`", raw.join(" ")));
    let [a, b, n] = raw else { return Err(bad()) };
    let a: f64 = a.parse().map_err(|_| bad())?;
    let b: f64 = b.parse().map_err(|_| bad())?;
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    Ok(linspace(a, b, n))
}

fn eval_in<T: Target>(args: &EvalArgs) -> CliResult<f64> {
    let e = Evaluator::<T>::new(args.p, args.kind.into(), &args.eval.options())?;
    Ok(e.derivative(args.derivative, T::from_f64(args.x))?.to_f64())
}

fn cmd_eval(args: EvalArgs) -> CliResult {
    if args.derivative > 2 {
        return Err(Error::UnsupportedDerivative {
            p: args.p,
            requested: args.derivative,
            available: 2,
        }
        .into());
    }
    let v = match args.precision {
        Precision::F32 => eval_in::<f32>(&args)?,
        Precision::F64 => eval_in::<f64>(&args)?,
    };
    println!("{}", format_f64(v));
    Ok(())
}

fn cmd_grid(args: GridArgs) -> CliResult {
    let options = GridOptions {
        budget_bytes: args.budget_mib as u128 * (1 << 20),
    };
    let grid = match args.kind {
        Kind::Phi => build_scaling_grid::<DoubleF64>(args.p, args.refinement, args.derivative, &options)?,
        Kind::Psi => build_wavelet_grid::<DoubleF64>(args.p, args.refinement, args.derivative, &options)?,
    };
    let file = GridFile::from_grid(&grid);
    let mut out = open_out(&args.out)?;
    match args.format {
        GridFormat::Csv => file.write_csv(&mut out)?,
        GridFormat::Bin => file.write_binary(&mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_convergence(args: ConvergenceArgs) -> CliResult {
    if args.j_max < args.j_min + 3 {
        return Err(Failure::usage(format!(
            "j_max − j_min must be at least 3, got {}..{}",
            args.j_min, args.j_max
        )));
    }
    let options = EvaluatorOptions {
        interpolator: args.interpolator,
        ..EvaluatorOptions::default()
    };
    let range = (args.j_min, args.j_max);
    let fit = match args.precision {
        Precision::F32 => convergence_study::<f32>(args.p, args.kind.into(), range, args.delta, &options)?,
        Precision::F64 => convergence_study::<f64>(args.p, args.kind.into(), range, args.delta, &options)?,
    };
    let mut out = open_out(&args.out)?;
    writeln!(out, "j,log2_sup_error")?;
    for (j, e) in &fit.samples {
        writeln!(out, "{j},{}", format_f64(*e))?;
    }
    out.flush()?;
    write_summary(&args.summary, &Summary::from_fit(&fit))
}

fn ulp_in<T>(args: &UlpArgs) -> CliResult<(Summary, Vec<daubechies::accuracy::UlpRecord>)>
where
    T: Target,
    T::Wide: Target,
{
    let e = Evaluator::<T>::new(args.p, args.kind.into(), &args.eval.options())?;
    let reference = reference_evaluator(&e, REFERENCE_BUDGET_BYTES)?;
    let report = ulp_report(&e, &reference, &SampleSpec::uniform(args.samples, args.seed), args.cond_threshold)?;
    Ok((Summary::from_ulp(args.p, e.interpolator(), &report.summary), report.records))
}

fn cmd_ulp(args: UlpArgs) -> CliResult {
    if args.samples == 0 {
        return Err(Failure::usage("--samples must be positive"));
    }
    if !(args.cond_threshold > 0.0) {
        return Err(Failure::usage("--cond-threshold must be positive"));
    }
    let (summary, records) = match args.precision {
        Precision::F32 => ulp_in::<f32>(&args)?,
        Precision::F64 => ulp_in::<f64>(&args)?,
    };
    let mut out = open_out(&args.out)?;
    writeln!(out, "x,ulps,cond,flag")?;
    for r in &records {
        writeln!(
            out,
            "{},{},{},{}",
            format_f64(r.x),
            format_f64(r.ulps),
            format_f64(r.cond),
            r.flag.as_str()
        )?;
    }
    out.flush()?;
    write_summary(&args.summary, &summary)
}

fn cmd_cwt(args: CwtArgs) -> CliResult {
    let scales = parse_range("s", &args.s)?;
    let translates = parse_range("t", &args.t)?;
    if scales.iter().any(|&s| s == 0.0) {
        return Err(Failure {
            code: EXIT_USAGE,
            tag: "domain",
            message: "scale s = 0 lies in the requested range".into(),
        });
    }
    if !(args.tol > 0.0) {
        return Err(Failure::usage("--tol must be positive"));
    }
    let psi = WaveletEvaluator::<f64>::with_options(args.p, &args.eval.options())?;
    let f = args.function.clone();
    let rows = scalogram(|x| f.eval(x), &psi, &scales, &translates, args.tol)?;
    let mut out = open_out(&args.out)?;
    write_csv(&mut out, &["s", "t", "W"], rows.iter().map(|r| [r.s, r.t, r.w]))?;
    Ok(())
}

fn expand_one(args: &ExpandArgs, p: u32, interval: (f64, f64)) -> CliResult<WaveletCoefficientSet> {
    let options = args.eval.options();
    let phi = ScalingEvaluator::<f64>::with_options(p, &options)?;
    let psi = WaveletEvaluator::<f64>::with_options(p, &options)?;
    let spec = ExpansionSpec {
        breakpoints: args.function.breakpoints(),
        quad: QuadOptions::new(args.tol),
        ..ExpansionSpec::new(p, args.j_min, args.j_max, interval)
    };
    let f = &args.function;
    let set = expansion_coefficients(|x| f.eval(x), &phi, &psi, &spec)?;
    if !set.unconverged.is_empty() {
        eprintln!(
            "warning: {} of {} coefficients for p = {p} did not reach the quadrature tolerance",
            set.unconverged.len(),
            set.len()
        );
    }
    Ok(set.threshold(args.tau))
}

fn cmd_expand(args: ExpandArgs) -> CliResult {
    if args.j_min > args.j_max {
        return Err(Failure::usage(format!("--j-min {} exceeds --j-max {}", args.j_min, args.j_max)));
    }
    if !(args.tau >= 0.0) || !(args.tol > 0.0) {
        return Err(Failure::usage("--tau must be non-negative and --tol positive"));
    }
    let p_max = args.p_max.unwrap_or(args.p);
    if p_max < args.p {
        return Err(Failure::usage("--p-max must be at least --p"));
    }
    let interval = match (&args.interval, args.function.support()) {
        (Some(v), _) => (v[0], v[1]),
        (None, Some(s)) => s,
        (None, None) => return Err(Failure::usage(format!("--interval is required for {}", args.function))),
    };
    if !(interval.0 < interval.1) {
        return Err(Failure::usage("--interval must satisfy A < B"));
    }
    let mut best: Option<(f64, WaveletCoefficientSet)> = None;
    for p in args.p..=p_max {
        let set = expand_one(&args, p, interval)?;
        if p_max == args.p {
            best = Some((f64::NAN, set));
            break;
        }
        let sparsity = hoyer_sparsity(&set.values()).unwrap_or(f64::NAN);
        eprintln!("p = {p}: {} coefficients, Hoyer sparsity {}", set.len(), format_f64(sparsity));
        if best.as_ref().map_or(true, |(s, _)| sparsity > *s) {
            best = Some((sparsity, set));
        }
    }
    let (_, set) = best.expect("at least one order");
    let mut out = open_out(&args.out)?;
    set.write_to(&mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_reconstruct(args: ReconstructArgs) -> CliResult {
    if args.samples == 0 {
        return Err(Failure::usage("--samples must be positive"));
    }
    let (a, b) = (args.interval[0], args.interval[1]);
    if !(a <= b) {
        return Err(Failure::usage("--interval must satisfy A ≤ B"));
    }
    let file = File::open(&args.coefficients)
        .map_err(|e| Failure::from(Error::Io(format!("{}: {e}", args.coefficients.display()))))?;
    let set = WaveletCoefficientSet::read_from(BufReader::new(file))?;
    let xs = linspace(a, b, args.samples);
    let values: Vec<f64> = if set.is_empty() {
        vec![0.0; xs.len()]
    } else {
        let options = args.eval.options();
        let phi = ScalingEvaluator::<f64>::with_options(set.p, &options)?;
        let psi = WaveletEvaluator::<f64>::with_options(set.p, &options)?;
        xs.iter().map(|&x| set.eval(&phi, &psi, x)).collect()
    };
    let mut out = open_out(&args.out)?;
    write_csv(&mut out, &["x", "value"], xs.iter().zip(&values).map(|(x, v)| [*x, *v]))?;
    Ok(())
}

fn cmd_defaults(action: DefaultsAction) -> CliResult {
    match action {
        DefaultsAction::Show => {
            let json = serde_json::to_string_pretty(&DefaultsTable::embedded())
                .map_err(|e| Failure::from(Error::Format(e.to_string())))?;
            println!("{json}");
        }
        DefaultsAction::Regen {
            samples,
            seed,
            cond_threshold,
            out,
            rust,
        } => {
            if samples == 0 {
                return Err(Failure::usage("--samples must be positive"));
            }
            let options = RegenOptions {
                samples,
                seed,
                cond_threshold,
            };
            let table = DefaultsTable::regenerate(&options, |s| {
                eprintln!(
                    "p = {:2}: j = {:2}, median {}, p99 {}{}",
                    s.p,
                    s.refinement,
                    format_f64(s.median_ulp_wellcond),
                    format_f64(s.p99_ulp_wellcond),
                    if s.reached { "" } else { " (budget cap)" }
                );
            })?;
            let json =
                serde_json::to_string_pretty(&table).map_err(|e| Failure::from(Error::Format(e.to_string())))?;
            let mut w = open_out(&out)?;
            writeln!(w, "{json}")?;
            w.flush()?;
            if let Some(path) = rust {
                std::fs::write(path, table.to_rust())?;
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Grid(a) => cmd_grid(a),
        Command::Convergence(a) => cmd_convergence(a),
        Command::Ulp(a) => cmd_ulp(a),
        Command::Cwt(a) => cmd_cwt(a),
        Command::Expand(a) => cmd_expand(a),
        Command::Reconstruct(a) => cmd_reconstruct(a),
        Command::Defaults { action } => cmd_defaults(action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error[{}]: {}", f.tag, f.message);
            ExitCode::from(f.code)
        }
    }
}
