//! ULP distances, condition numbers, sup-norm errors and convergence fits.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dyadic::{build_scaling_grid, build_wavelet_grid, DyadicGrid, FunctionKind, GridOptions};
use crate::error::{Error, Result};
use crate::evaluators::{Evaluator, EvaluatorOptions};
use crate::interpolators::InterpolatorKind;
use crate::real::{DoubleF64, Real, Target};

/// Default reference offset `Δ` for sup-norm errors.
pub const DEFAULT_DELTA: u32 = 6;
/// Default cutoff separating well- from ill-conditioned abscissas.
pub const DEFAULT_COND_THRESHOLD: f64 = 1e3;
/// Minimum refinement gap between an evaluator and its ULP reference.
pub const REFERENCE_GAP: u32 = 4;

/// Signed distance `(computed − reference) / ulp(round(reference))`.
///
/// `None` when the reference rounds to zero or to a subnormal of `T`.
pub fn ulp_distance<T: Target>(computed: T, reference: T::Wide) -> Option<f64> {
    let rounded = T::from_wide(reference);
    if rounded.abs().to_f64() < T::min_positive() {
        return None;
    }
    let diff = (computed.to_dd() - reference.to_dd()).to_f64();
    Some(diff / rounded.ulp())
}

/// `|x f'(x) / f(x)|`, infinite at roots where `x f'(x) ≠ 0`.
pub fn condition_number(value: f64, derivative: f64, x: f64) -> f64 {
    let num = (x * derivative).abs();
    if num == 0.0 {
        0.0
    } else if value == 0.0 {
        f64::INFINITY
    } else {
        num / value.abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UlpFlag {
    Ok,
    /// Reference rounds to zero in the target type.
    Zero,
    /// Reference rounds to a subnormal of the target type.
    Subnormal,
}

impl UlpFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            UlpFlag::Ok => "ok",
            UlpFlag::Zero => "zero",
            UlpFlag::Subnormal => "subnormal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UlpRecord {
    pub x: f64,
    /// NaN for flagged records.
    pub ulps: f64,
    pub cond: f64,
    pub flag: UlpFlag,
}

/// Order statistics of `|ulps|` over unflagged records.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct UlpSummary {
    pub samples: usize,
    pub flagged: usize,
    pub median_ulp: f64,
    pub p99_ulp: f64,
    pub max_ulp: f64,
    pub wellcond_samples: usize,
    pub median_ulp_wellcond: f64,
    pub p99_ulp_wellcond: f64,
    pub max_ulp_wellcond: f64,
    pub cond_threshold: f64,
}

/// Nearest-rank percentile of an ascending slice (`q` in `[0, 1]`).
fn percentile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    match n {
        0 => f64::NAN,
        _ if n % 2 == 1 => sorted[n / 2],
        _ => 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]),
    }
}

impl UlpSummary {
    pub fn from_records(records: &[UlpRecord], cond_threshold: f64) -> Self {
        let mut all: Vec<f64> = records
            .iter()
            .filter(|r| r.flag == UlpFlag::Ok)
            .map(|r| r.ulps.abs())
            .collect();
        let mut well: Vec<f64> = records
            .iter()
            .filter(|r| r.flag == UlpFlag::Ok && r.cond <= cond_threshold)
            .map(|r| r.ulps.abs())
            .collect();
        all.sort_by(f64::total_cmp);
        well.sort_by(f64::total_cmp);
        UlpSummary {
            samples: records.len(),
            flagged: records.len() - all.len(),
            median_ulp: median(&all),
            p99_ulp: percentile(&all, 0.99),
            max_ulp: all.last().copied().unwrap_or(f64::NAN),
            wellcond_samples: well.len(),
            median_ulp_wellcond: median(&well),
            p99_ulp_wellcond: percentile(&well, 0.99),
            max_ulp_wellcond: well.last().copied().unwrap_or(f64::NAN),
            cond_threshold,
        }
    }
}

/// ULP records for arbitrary closures. `reference` returns the wide value
/// and derivative at `x`. Records come back in the order of `xs`.
pub fn ulp_records<T, F, R>(xs: &[T], computed: F, reference: R) -> Vec<UlpRecord>
where
    T: Target,
    F: Fn(T) -> T + Sync,
    R: Fn(T::Wide) -> (T::Wide, T::Wide) + Sync,
{
    xs.par_iter()
        .map(|&x| {
            let xw = T::Wide::from_dd(x.to_dd());
            let (value, deriv) = reference(xw);
            let cond = condition_number(value.to_f64(), deriv.to_f64(), x.to_f64());
            let rounded = T::from_wide(value);
            let flag = if rounded == T::zero() {
                UlpFlag::Zero
            } else if rounded.abs().to_f64() < T::min_positive() {
                UlpFlag::Subnormal
            } else {
                UlpFlag::Ok
            };
            let ulps = match flag {
                UlpFlag::Ok => ulp_distance(computed(x), value).unwrap_or(f64::NAN),
                _ => f64::NAN,
            };
            UlpRecord {
                x: x.to_f64(),
                ulps,
                cond,
                flag,
            }
        })
        .collect()
}

/// Where and how many abscissas to draw.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSpec {
    pub count: usize,
    /// Defaults to the evaluator's support.
    pub region: Option<(f64, f64)>,
    pub seed: u64,
}

impl SampleSpec {
    pub fn uniform(count: usize, seed: u64) -> Self {
        SampleSpec {
            count,
            region: None,
            seed,
        }
    }
}

/// Seeded uniform abscissas rounded to `T`, ascending.
pub fn sample_abscissas<T: Real>(count: usize, (a, b): (f64, f64), seed: u64) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<T> = (0..count)
        .map(|_| T::from_f64(rng.gen_range(a..=b)))
        .collect();
    xs.sort_by(|u, v| u.partial_cmp(v).expect("finite abscissas"));
    xs
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UlpReport {
    pub records: Vec<UlpRecord>,
    pub summary: UlpSummary,
}

/// Scores `e` against a wide-precision evaluator of the same function at a
/// refinement at least [`REFERENCE_GAP`] levels finer.
pub fn ulp_report<T>(
    e: &Evaluator<T>,
    reference: &Evaluator<T::Wide>,
    spec: &SampleSpec,
    cond_threshold: f64,
) -> Result<UlpReport>
where
    T: Target,
    T::Wide: Target,
{
    if spec.count == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    if reference.p() != e.p() || reference.kind() != e.kind() {
        return Err(Error::InvalidArgument(
            "reference evaluates a different function".into(),
        ));
    }
    if reference.refinement() < e.refinement() + REFERENCE_GAP {
        return Err(Error::InvalidArgument(format!(
            "reference refinement {} must be at least {}",
            reference.refinement(),
            e.refinement() + REFERENCE_GAP
        )));
    }
    let region = spec.region.unwrap_or_else(|| e.support());
    let xs = sample_abscissas::<T>(spec.count, region, spec.seed);
    let records = ulp_records(
        &xs,
        |x| e.value(x),
        |x| {
            let v = reference.value(x);
            let d = reference.prime(x).unwrap_or_else(|_| T::Wide::zero());
            (v, d)
        },
    );
    let summary = UlpSummary::from_records(&records, cond_threshold);
    Ok(UlpReport { records, summary })
}

/// Reference evaluator for [`ulp_report`]: same `p`, kind and interpolator,
/// `REFERENCE_GAP` levels finer, answering in `T::Wide`.
pub fn reference_evaluator<T>(e: &Evaluator<T>, budget_bytes: u128) -> Result<Evaluator<T::Wide>>
where
    T: Target,
    T::Wide: Target,
{
    Evaluator::new(
        e.p(),
        e.kind(),
        &EvaluatorOptions {
            refinement: Some(e.refinement() + REFERENCE_GAP),
            interpolator: Some(e.interpolator()),
            alpha: e.alpha().to_f64(),
            budget_bytes,
            ..EvaluatorOptions::default()
        },
    )
}

/// Wide reference grid of the value at refinement `j`.
pub fn reference_grid(p: u32, kind: FunctionKind, j: u32, budget_bytes: u128) -> Result<DyadicGrid<DoubleF64>> {
    let opts = GridOptions { budget_bytes };
    match kind {
        FunctionKind::Scaling => build_scaling_grid(p, j, 0, &opts),
        FunctionKind::Wavelet => build_wavelet_grid(p, j, 0, &opts),
    }
}

/// `max |e(x) − reference(x)|` over the reference nodes representable in `T`.
pub fn sup_error<T: Target>(e: &Evaluator<T>, reference: &DyadicGrid<DoubleF64>) -> Result<f64> {
    if reference.p() != e.p() || reference.kind() != e.kind() || reference.derivative() != 0 {
        return Err(Error::InvalidArgument(
            "reference grid samples a different function".into(),
        ));
    }
    if reference.refinement() < e.refinement() {
        return Err(Error::InvalidArgument(format!(
            "reference refinement {} is coarser than the evaluator's {}",
            reference.refinement(),
            e.refinement()
        )));
    }
    let worst = reference
        .values()
        .par_iter()
        .enumerate()
        .filter_map(|(i, r)| {
            let x = reference.abscissa(i);
            let xt = T::from_f64(x);
            if xt.to_f64() != x {
                return None;
            }
            Some((e.value(xt).to_dd() - *r).abs().to_f64())
        })
        .reduce(|| 0.0, f64::max);
    Ok(worst)
}

/// Ordinary least squares fit of `log2 ‖f − f_j‖∞` against `j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceFit {
    pub p: u32,
    pub interpolator: InterpolatorKind,
    pub samples: Vec<(u32, f64)>,
    pub intercept: f64,
    pub slope: f64,
    /// Root-mean-square residual of the fit.
    pub residual: f64,
}

pub const MIN_FIT_SAMPLES: usize = 4;

pub fn convergence_fit(
    p: u32,
    interpolator: InterpolatorKind,
    samples: Vec<(u32, f64)>,
) -> Result<ConvergenceFit> {
    let n = samples.len();
    if n < MIN_FIT_SAMPLES {
        return Err(Error::InsufficientData {
            got: n,
            need: MIN_FIT_SAMPLES,
        });
    }
    let nf = n as f64;
    let mx = samples.iter().map(|s| s.0 as f64).sum::<f64>() / nf;
    let my = samples.iter().map(|s| s.1).sum::<f64>() / nf;
    let sxx: f64 = samples.iter().map(|s| (s.0 as f64 - mx).powi(2)).sum();
    let sxy: f64 = samples.iter().map(|s| (s.0 as f64 - mx) * (s.1 - my)).sum();
    if sxx == 0.0 || samples.iter().any(|s| !s.1.is_finite()) {
        return Err(Error::InvalidArgument(
            "fit needs distinct refinements and finite errors".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = (samples
        .iter()
        .map(|s| (s.1 - intercept - slope * s.0 as f64).powi(2))
        .sum::<f64>()
        / nf)
        .sqrt();
    Ok(ConvergenceFit {
        p,
        interpolator,
        samples,
        intercept,
        slope,
        residual,
    })
}

/// Measures `log2` sup errors for `j` in `j_min..=j_max` against wide grids
/// `delta` levels finer, then fits them.
pub fn convergence_study<T: Target>(
    p: u32,
    kind: FunctionKind,
    (j_min, j_max): (u32, u32),
    delta: u32,
    options: &EvaluatorOptions,
) -> Result<ConvergenceFit> {
    if j_max < j_min + (MIN_FIT_SAMPLES as u32 - 1) {
        return Err(Error::InsufficientData {
            got: (j_max.saturating_sub(j_min) + 1) as usize,
            need: MIN_FIT_SAMPLES,
        });
    }
    let finest = reference_grid(p, kind, j_max + delta, options.budget_bytes)?;
    let mut samples = Vec::new();
    let mut interpolator = None;
    for j in j_min..=j_max {
        let e = Evaluator::<T>::new(
            p,
            kind,
            &EvaluatorOptions {
                refinement: Some(j),
                ..options.clone()
            },
        )?;
        interpolator = Some(e.interpolator());
        let reference = finest.coarsen(j + delta)?;
        samples.push((j, sup_error(&e, &reference)?.log2()));
    }
    convergence_fit(p, interpolator.expect("at least one level"), samples)
}

/// Key/value block written next to CSV reports.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub p: u32,
    pub interpolator: String,
    pub intercept: Option<f64>,
    pub slope: Option<f64>,
    pub residual: Option<f64>,
    pub median_ulp_wellcond: Option<f64>,
    pub max_ulp_wellcond: Option<f64>,
}

impl Summary {
    pub fn from_fit(fit: &ConvergenceFit) -> Self {
        Summary {
            p: fit.p,
            interpolator: fit.interpolator.to_string(),
            intercept: Some(fit.intercept),
            slope: Some(fit.slope),
            residual: Some(fit.residual),
            ..Summary::default()
        }
    }

    pub fn from_ulp(p: u32, interpolator: InterpolatorKind, s: &UlpSummary) -> Self {
        Summary {
            p,
            interpolator: interpolator.to_string(),
            median_ulp_wellcond: Some(s.median_ulp_wellcond),
            max_ulp_wellcond: Some(s.max_ulp_wellcond),
            ..Summary::default()
        }
    }

    /// `key: value` lines in a fixed order; absent entries are omitted.
    pub fn to_text(&self) -> String {
        let mut out = format!("p: {}\ninterpolator: {}\n", self.p, self.interpolator);
        let fields = [
            ("intercept", self.intercept),
            ("slope", self.slope),
            ("residual", self.residual),
            ("median_ulp_wellcond", self.median_ulp_wellcond),
            ("max_ulp_wellcond", self.max_ulp_wellcond),
        ];
        for (key, value) in fields {
            if let Some(v) = value {
                out.push_str(&format!("{key}: {}\n", crate::io::format_f64(v)));
            }
        }
        out
    }
}
