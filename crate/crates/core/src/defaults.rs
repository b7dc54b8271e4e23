//! Per-`p` default refinements.
//!
//! Two tables exist. `absolute` holds the smallest `j` whose predicted
//! sup-norm error is at most `2^-24`. `ulp` is per target type: for `f32`
//! it is the smallest `j` whose measured well-conditioned ULP errors have a
//! median of at most 1.5 and a 99th percentile of at most 4 (see
//! [`search_ulp_f32`]); for `f64`, where a reference
//! evaluator `j + 4` levels finer is out of reach, it is the smallest `j`
//! whose predicted error is at most `2^-63`, the level that reproduces the
//! published anchor `p = 8 → 21`. Every entry is capped
//! so that constructing the evaluator stays within [`TABLE_BUDGET_BYTES`].
//!
//! The embedded tables are regenerated by `daubechies defaults regen`; the
//! last run, including the per-`p` search results, is kept in
//! `data/defaults.json`.

use serde::{Deserialize, Serialize};

use crate::accuracy::{reference_evaluator, ulp_report, SampleSpec, DEFAULT_COND_THRESHOLD, REFERENCE_GAP};
use crate::dyadic::{error_model, FunctionKind};
use crate::error::Result;
use crate::evaluators::{estimated_bytes, Evaluator, EvaluatorOptions, Mode};
use crate::filters::{check_order, MAX_ORDER, MIN_ORDER};
use crate::interpolators::InterpolatorKind;
use crate::real::{Real, Target};

/// Construction budget a default refinement must fit in (256 MiB).
pub const TABLE_BUDGET_BYTES: u128 = 256 << 20;
/// Budget for the reference evaluators used while regenerating (1 GiB).
pub const REFERENCE_BUDGET_BYTES: u128 = 1 << 30;
pub const ABSOLUTE_LOG2_ERROR: f64 = -24.0;
pub const ULP_F64_LOG2_ERROR: f64 = -63.0;
pub const ULP_MEDIAN_TARGET: f64 = 1.5;
pub const ULP_P99_TARGET: f64 = 4.0;

const ORDERS: usize = (MAX_ORDER - MIN_ORDER + 1) as usize;

pub static ABSOLUTE: [u32; ORDERS] = [19, 19, 14, 11, 9, 8, 7, 6, 5, 5, 4, 4, 4, 4, 3, 3, 3, 3];
pub static ULP_F32: [u32; ORDERS] = [18, 17, 16, 14, 13, 12, 12, 11, 10, 10, 9, 9, 9, 9, 8, 8, 8, 8];
pub static ULP_F64: [u32; ORDERS] = [19, 19, 18, 18, 17, 17, 16, 16, 16, 16, 15, 14, 13, 12, 12, 11, 10, 10];

fn slot(p: u32) -> usize {
    (p - MIN_ORDER) as usize
}

/// Default refinement for `p` in `mode` when evaluating in `T`.
pub fn default_refinement<T: Real>(p: u32, mode: Mode) -> Result<u32> {
    check_order(p)?;
    Ok(match mode {
        Mode::Absolute => ABSOLUTE[slot(p)],
        Mode::Ulp if T::MANTISSA_BITS <= 24 => ULP_F32[slot(p)],
        Mode::Ulp => ULP_F64[slot(p)],
    })
}

/// Largest `j` whose evaluator (either kind) fits `budget` in `T`.
pub fn budget_cap<T: Target>(p: u32, budget: u128) -> Result<u32> {
    let interp = InterpolatorKind::best_for(p)?;
    let mut j = 0;
    while estimated_bytes::<T>(p, j + 1, FunctionKind::Wavelet, interp) <= budget {
        j += 1;
    }
    Ok(j)
}

/// Smallest `j` with predicted `log2` error at most `log2_error`, capped.
pub fn model_rule(p: u32, log2_error: f64, cap: u32) -> Result<u32> {
    let (a, b) = error_model(p)?;
    let j = ((log2_error - a) / b).ceil().max(0.0) as u32;
    Ok(j.min(cap))
}

pub fn absolute_rule(p: u32) -> Result<u32> {
    model_rule(p, ABSOLUTE_LOG2_ERROR, budget_cap::<f64>(p, TABLE_BUDGET_BYTES)?)
}

pub fn ulp_f64_rule(p: u32) -> Result<u32> {
    model_rule(p, ULP_F64_LOG2_ERROR, budget_cap::<f64>(p, TABLE_BUDGET_BYTES)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegenOptions {
    pub samples: usize,
    pub seed: u64,
    pub cond_threshold: f64,
}

impl Default for RegenOptions {
    fn default() -> Self {
        RegenOptions {
            samples: 100_000,
            seed: 2024,
            cond_threshold: DEFAULT_COND_THRESHOLD,
        }
    }
}

/// Outcome of the `f32` search for one `p`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UlpSearch {
    pub p: u32,
    pub refinement: u32,
    pub median_ulp_wellcond: f64,
    pub p99_ulp_wellcond: f64,
    /// `false` when a budget stopped the search before the target was met.
    pub reached: bool,
}

/// Increases `j` until the well-conditioned ULP errors of the `f32` scaling
/// evaluator meet [`ULP_MEDIAN_TARGET`] and [`ULP_P99_TARGET`], or a budget
/// stops the search.
pub fn search_ulp_f32(p: u32, options: &RegenOptions) -> Result<UlpSearch> {
    let cap = budget_cap::<f32>(p, TABLE_BUDGET_BYTES)?;
    let interp = InterpolatorKind::best_for(p)?;
    let mut best = None;
    for j in 0..=cap {
        let reference_bytes = estimated_bytes::<f64>(p, j + REFERENCE_GAP, FunctionKind::Scaling, interp);
        if reference_bytes > REFERENCE_BUDGET_BYTES {
            break;
        }
        let e = Evaluator::<f32>::new(p, FunctionKind::Scaling, &EvaluatorOptions::refinement(j))?;
        let r = reference_evaluator(&e, REFERENCE_BUDGET_BYTES)?;
        let spec = SampleSpec::uniform(options.samples, options.seed);
        let summary = ulp_report(&e, &r, &spec, options.cond_threshold)?.summary;
        let outcome = UlpSearch {
            p,
            refinement: j,
            median_ulp_wellcond: summary.median_ulp_wellcond,
            p99_ulp_wellcond: summary.p99_ulp_wellcond,
            reached: summary.median_ulp_wellcond <= ULP_MEDIAN_TARGET
                && summary.p99_ulp_wellcond <= ULP_P99_TARGET,
        };
        if outcome.reached {
            return Ok(outcome);
        }
        best = Some(outcome);
    }
    Ok(best.expect("refinement 0 always fits"))
}

/// The three tables as data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DefaultsTable {
    pub absolute: Vec<u32>,
    pub ulp_f32: Vec<u32>,
    pub ulp_f64: Vec<u32>,
    /// Search details behind `ulp_f32` (empty for the embedded table).
    #[serde(default)]
    pub ulp_f32_search: Vec<UlpSearch>,
}

impl DefaultsTable {
    pub fn embedded() -> Self {
        DefaultsTable {
            absolute: ABSOLUTE.to_vec(),
            ulp_f32: ULP_F32.to_vec(),
            ulp_f64: ULP_F64.to_vec(),
            ulp_f32_search: Vec::new(),
        }
    }

    /// Recomputes every table; `progress` is called once per finished `p`.
    pub fn regenerate(options: &RegenOptions, mut progress: impl FnMut(&UlpSearch)) -> Result<Self> {
        let mut table = DefaultsTable {
            absolute: Vec::new(),
            ulp_f32: Vec::new(),
            ulp_f64: Vec::new(),
            ulp_f32_search: Vec::new(),
        };
        for p in MIN_ORDER..=MAX_ORDER {
            table.absolute.push(absolute_rule(p)?);
            table.ulp_f64.push(ulp_f64_rule(p)?);
            let search = search_ulp_f32(p, options)?;
            progress(&search);
            table.ulp_f32.push(search.refinement);
            table.ulp_f32_search.push(search);
        }
        Ok(table)
    }

    /// The tables as Rust statics, ready to paste over the embedded ones.
    pub fn to_rust(&self) -> String {
        let row = |name: &str, v: &[u32]| {
            let items: Vec<String> = v.iter().map(|j| j.to_string()).collect();
            format!("pub static {name}: [u32; ORDERS] = [{}];\n", items.join(", "))
        };
        row("ABSOLUTE", &self.absolute) + &row("ULP_F32", &self.ulp_f32) + &row("ULP_F64", &self.ulp_f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_tables_match_their_rules() {
        for p in MIN_ORDER..=MAX_ORDER {
            assert_eq!(ABSOLUTE[slot(p)], absolute_rule(p).unwrap(), "absolute, p = {p}");
            assert_eq!(ULP_F64[slot(p)], ulp_f64_rule(p).unwrap(), "ulp f64, p = {p}");
        }
    }

    #[test]
    fn f64_rule_reproduces_the_p8_anchor_before_capping() {
        assert_eq!(model_rule(8, ULP_F64_LOG2_ERROR, u32::MAX).unwrap(), 21);
        // the p = 15 anchor (14) would need a stricter level than p = 8 allows
        assert_eq!(model_rule(15, ULP_F64_LOG2_ERROR, u32::MAX).unwrap(), 12);
    }

    #[test]
    fn defaults_fit_their_budget() {
        for p in MIN_ORDER..=MAX_ORDER {
            let interp = InterpolatorKind::best_for(p).unwrap();
            for kind in [FunctionKind::Scaling, FunctionKind::Wavelet] {
                let j = default_refinement::<f64>(p, Mode::Ulp).unwrap();
                assert!(estimated_bytes::<f64>(p, j, kind, interp) <= TABLE_BUDGET_BYTES);
                let j = default_refinement::<f32>(p, Mode::Ulp).unwrap();
                assert!(estimated_bytes::<f32>(p, j, kind, interp) <= TABLE_BUDGET_BYTES);
            }
        }
    }

    #[test]
    fn embedded_tables_match_the_recorded_run() {
        let recorded: DefaultsTable = serde_json::from_str(include_str!("../data/defaults.json")).unwrap();
        let embedded = DefaultsTable::embedded();
        assert_eq!(recorded.absolute, embedded.absolute);
        assert_eq!(recorded.ulp_f32, embedded.ulp_f32);
        assert_eq!(recorded.ulp_f64, embedded.ulp_f64);
        assert_eq!(recorded.ulp_f32_search.len(), ORDERS);
    }

    #[test]
    fn rust_rendering_round_trips_the_embedded_table() {
        let src = DefaultsTable::embedded().to_rust();
        assert!(src.contains("pub static ULP_F64"));
        assert_eq!(src.lines().count(), 3);
    }
}
