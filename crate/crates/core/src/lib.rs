pub mod accuracy;
pub mod defaults;
pub mod dyadic;
pub mod error;
pub mod evaluators;
pub mod filters;
pub mod interpolators;
pub mod io;
pub mod real;
pub mod transforms;

pub use error::{Error, Result};
pub use evaluators::{make_scaling, make_wavelet, Evaluator, EvaluatorOptions, Mode, ScalingEvaluator, WaveletEvaluator};
