//! Evaluation objects for `φ` and `ψ`.
//!
//! Construction builds the value grid and every derivative grid the
//! interpolant needs in the wide type, rounds each entry once to the target
//! type and interleaves the result. Afterwards an evaluator is immutable and
//! cloning it only bumps a reference count.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::defaults::default_refinement;
use crate::dyadic::{
    build_scaling_grid, build_wavelet_grid, grid_len, max_derivative, FunctionKind, GridOptions,
    DEFAULT_BUDGET_BYTES,
};
use crate::error::{Error, Result};
use crate::filters::check_order;
use crate::interpolators::{InterleavedTable, InterpolatorKind, HOLDER_ALPHA};
use crate::real::Target;

/// Which per-`p` default refinement table to use when none is given.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Aim for about one ULP of the target type in well-conditioned regions.
    #[default]
    Ulp,
    /// Predicted sup-norm error at most `2^-24`.
    Absolute,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ulp => "ulp",
            Mode::Absolute => "absolute",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ulp" => Ok(Mode::Ulp),
            "absolute" => Ok(Mode::Absolute),
            other => Err(Error::InvalidArgument(format!(
                "unknown mode `{other}` (expected ulp or absolute)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvaluatorOptions {
    /// Explicit refinement; the mode's default table is used when `None`.
    pub refinement: Option<u32>,
    pub mode: Mode,
    /// Overrides the per-`p` interpolator choice.
    pub interpolator: Option<InterpolatorKind>,
    /// Exponent of the matched Hölder model.
    pub alpha: f64,
    pub budget_bytes: u128,
}

impl Default for EvaluatorOptions {
    fn default() -> Self {
        EvaluatorOptions {
            refinement: None,
            mode: Mode::default(),
            interpolator: None,
            alpha: HOLDER_ALPHA,
            budget_bytes: DEFAULT_BUDGET_BYTES,
        }
    }
}

impl EvaluatorOptions {
    pub fn refinement(j: u32) -> Self {
        EvaluatorOptions {
            refinement: Some(j),
            ..Self::default()
        }
    }

    pub fn mode(mode: Mode) -> Self {
        EvaluatorOptions {
            mode,
            ..Self::default()
        }
    }
}

/// Derivative grids built for an interpolator: the linear interpolant still
/// gets a `φ'` column so that `prime` is meaningful.
fn derivative_columns(kind: InterpolatorKind) -> usize {
    kind.derivative_grids_required().max(1)
}

/// Peak bytes needed to construct an evaluator: wide grids (the refinement
/// step holds two levels at once) plus the rounded columns and the
/// interleaved table.
pub fn estimated_bytes<T: Target>(
    p: u32,
    j: u32,
    kind: FunctionKind,
    interpolator: InterpolatorKind,
) -> u128 {
    let count = ((2 * p as u128 - 1) << j.min(100)) + 1;
    let columns = derivative_columns(interpolator) as u128 + 1;
    let wide = std::mem::size_of::<T::Wide>() as u128;
    let target = std::mem::size_of::<T>() as u128;
    let grids = match kind {
        FunctionKind::Scaling => 3,
        FunctionKind::Wavelet => 4,
    };
    columns * count * (wide * grids / 2 + 2 * target)
}

#[derive(Debug)]
struct Inner<T> {
    p: u32,
    kind: FunctionKind,
    interpolator: InterpolatorKind,
    alpha: T,
    table: InterleavedTable<T>,
    lo: T,
    hi: T,
}

/// Shared evaluator core; see [`ScalingEvaluator`] and [`WaveletEvaluator`].
#[derive(Debug)]
pub struct Evaluator<T> {
    inner: Arc<Inner<T>>,
}

impl<T> Clone for Evaluator<T> {
    fn clone(&self) -> Self {
        Evaluator {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<T: Target> Evaluator<T> {
    pub fn new(p: u32, kind: FunctionKind, options: &EvaluatorOptions) -> Result<Self> {
        check_order(p)?;
        let interpolator = match options.interpolator {
            Some(k) => k,
            None => InterpolatorKind::best_for(p)?,
        };
        if !(options.alpha > 0.0 && options.alpha < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "Hölder exponent must lie in (0, 1), got {}",
                options.alpha
            )));
        }
        let j = match options.refinement {
            Some(j) => j,
            None => default_refinement::<T>(p, options.mode)?,
        };
        let derivs = derivative_columns(interpolator);
        let max = max_derivative(p)?;
        if derivs as u32 > max {
            return Err(Error::DerivativeUnavailable {
                p,
                n: derivs as u32,
                max,
            });
        }
        let required = estimated_bytes::<T>(p, j, kind, interpolator);
        crate::dyadic::check_budget(required, options.budget_bytes)?;
        if grid_len(p, j).is_none() {
            return Err(Error::BudgetExceeded {
                required,
                budget: options.budget_bytes,
            });
        }

        let grid_opts = GridOptions {
            budget_bytes: options.budget_bytes,
        };
        let columns: Vec<Vec<T>> = (0..=derivs as u32)
            .into_par_iter()
            .map(|n| {
                let grid = match kind {
                    FunctionKind::Scaling => build_scaling_grid::<T::Wide>(p, j, n, &grid_opts)?,
                    FunctionKind::Wavelet => build_wavelet_grid::<T::Wide>(p, j, n, &grid_opts)?,
                };
                Ok(grid.into_values().into_iter().map(T::from_wide).collect())
            })
            .collect::<Result<_>>()?;
        let refs: Vec<&[T]> = columns.iter().map(|c| c.as_slice()).collect();
        let (lo, hi) = kind.support(p);
        let table = InterleavedTable::from_columns(lo, j, &refs)?;
        Ok(Evaluator {
            inner: Arc::new(Inner {
                p,
                kind,
                interpolator,
                alpha: T::from_f64(options.alpha),
                table,
                lo: T::from_f64(lo as f64),
                hi: T::from_f64(hi as f64),
            }),
        })
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn kind(&self) -> FunctionKind {
        self.inner.kind
    }

    pub fn refinement(&self) -> u32 {
        self.inner.table.refinement()
    }

    pub fn interpolator(&self) -> InterpolatorKind {
        self.inner.interpolator
    }

    pub fn alpha(&self) -> T {
        self.inner.alpha
    }

    /// Closed support `[a, b]`.
    pub fn support(&self) -> (f64, f64) {
        let (a, b) = self.inner.kind.support(self.inner.p);
        (a as f64, b as f64)
    }

    /// The interleaved table in target precision.
    pub fn table(&self) -> &InterleavedTable<T> {
        &self.inner.table
    }

    pub fn has_prime(&self) -> bool {
        true
    }

    pub fn has_double_prime(&self) -> bool {
        matches!(
            self.inner.interpolator,
            InterpolatorKind::QuinticHermite | InterpolatorKind::SepticHermite
        )
    }

    /// Highest derivative order `value`/`prime`/`double_prime` can answer.
    pub fn max_order(&self) -> u32 {
        if self.has_double_prime() {
            2
        } else {
            1
        }
    }

    #[inline]
    fn inside(&self, x: T) -> bool {
        x >= self.inner.lo && x <= self.inner.hi
    }

    /// `f(x)`; exactly zero outside the support, NaN for NaN.
    #[inline]
    pub fn value(&self, x: T) -> T {
        if !self.inside(x) {
            return if x == x { T::zero() } else { x };
        }
        let tab = &self.inner.table;
        let y = match self.inner.interpolator {
            InterpolatorKind::Linear => tab.linear(x),
            InterpolatorKind::MatchedHolder => tab.matched_holder(self.inner.alpha, x),
            InterpolatorKind::CubicHermite => tab.cubic_hermite(x),
            InterpolatorKind::QuinticHermite => tab.quintic_hermite(x),
            InterpolatorKind::SepticHermite => tab.septic_hermite(x),
        };
        y.unwrap_or_else(T::zero)
    }

    /// `f'(x)`. For the linear interpolant this interpolates the derivative
    /// grid; for matched Hölder it returns the stored derivative at nodes.
    #[inline]
    pub fn prime(&self, x: T) -> Result<T> {
        if !self.inside(x) {
            return Ok(if x == x { T::zero() } else { x });
        }
        let tab = &self.inner.table;
        let y = match self.inner.interpolator {
            InterpolatorKind::Linear => tab.linear_column(1, x),
            InterpolatorKind::MatchedHolder => tab.matched_holder_prime(self.inner.alpha, x),
            InterpolatorKind::CubicHermite => tab.cubic_hermite_prime(x),
            InterpolatorKind::QuinticHermite => tab.quintic_hermite_prime(x),
            InterpolatorKind::SepticHermite => tab.septic_hermite_prime(x),
        };
        Ok(y.unwrap_or_else(T::zero))
    }

    #[inline]
    pub fn double_prime(&self, x: T) -> Result<T> {
        if !self.has_double_prime() {
            return Err(Error::UnsupportedDerivative {
                p: self.inner.p,
                requested: 2,
                available: self.max_order(),
            });
        }
        if !self.inside(x) {
            return Ok(if x == x { T::zero() } else { x });
        }
        let tab = &self.inner.table;
        let y = match self.inner.interpolator {
            InterpolatorKind::QuinticHermite => tab.quintic_hermite_double_prime(x),
            _ => tab.septic_hermite_double_prime(x),
        };
        Ok(y.unwrap_or_else(T::zero))
    }

    /// Derivative of any order up to [`max_order`](Self::max_order).
    pub fn derivative(&self, order: u32, x: T) -> Result<T> {
        match order {
            0 => Ok(self.value(x)),
            1 => self.prime(x),
            2 => self.double_prime(x),
            _ => Err(Error::UnsupportedDerivative {
                p: self.inner.p,
                requested: order,
                available: self.max_order(),
            }),
        }
    }
}

macro_rules! evaluator_newtype {
    ($(#[$doc:meta])* $name:ident, $kind:expr) => {
        $(#[$doc])*
        #[derive(Clone, Debug)]
        pub struct $name<T>(Evaluator<T>);

        impl<T: Target> $name<T> {
            /// Default refinement and interpolator for `p`.
            pub fn new(p: u32) -> Result<Self> {
                Self::with_options(p, &EvaluatorOptions::default())
            }

            pub fn with_refinement(p: u32, j: u32) -> Result<Self> {
                Self::with_options(p, &EvaluatorOptions::refinement(j))
            }

            pub fn with_options(p: u32, options: &EvaluatorOptions) -> Result<Self> {
                Evaluator::new(p, $kind, options).map($name)
            }

            pub fn into_inner(self) -> Evaluator<T> {
                self.0
            }
        }

        impl<T> Deref for $name<T> {
            type Target = Evaluator<T>;

            fn deref(&self) -> &Evaluator<T> {
                &self.0
            }
        }
    };
}

evaluator_newtype!(
    /// `φ` for `p` vanishing moments, supported on `[0, 2p−1]`.
    ScalingEvaluator,
    FunctionKind::Scaling
);
evaluator_newtype!(
    /// `ψ` for `p` vanishing moments, supported on `[1−p, p]`.
    WaveletEvaluator,
    FunctionKind::Wavelet
);

pub fn make_scaling<T: Target>(p: u32, refinement: Option<u32>, mode: Mode) -> Result<ScalingEvaluator<T>> {
    ScalingEvaluator::with_options(
        p,
        &EvaluatorOptions {
            refinement,
            mode,
            ..EvaluatorOptions::default()
        },
    )
}

pub fn make_wavelet<T: Target>(p: u32, refinement: Option<u32>, mode: Mode) -> Result<WaveletEvaluator<T>> {
    WaveletEvaluator::with_options(
        p,
        &EvaluatorOptions {
            refinement,
            mode,
            ..EvaluatorOptions::default()
        },
    )
}
