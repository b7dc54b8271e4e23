use thiserror::Error;

/// Errors reported by grid construction, evaluation and the transforms.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported order p = {p}: the number of vanishing moments must lie in 2..=19")]
    UnsupportedOrder { p: u32 },

    #[error("derivative of order {n} is unavailable for p = {p} (grids exist up to order {max})")]
    DerivativeUnavailable { p: u32, n: u32, max: u32 },

    #[error("eigenvalue 2^-{n} of the integer-value operator is missing or defective for p = {p}")]
    DefectiveEigenproblem { p: u32, n: u32 },

    #[error("evaluator for p = {p} does not provide derivative order {requested} (available orders: 0..={available})")]
    UnsupportedDerivative { p: u32, requested: u32, available: u32 },

    #[error("grid of {required} bytes exceeds the memory budget of {budget} bytes")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("insufficient data: {got} samples given, at least {need} required")]
    InsufficientData { got: usize, need: usize },

    #[error("quadrature did not converge: best estimate {value:e}, error estimate {error:e}")]
    NonConvergence { value: f64, error: f64 },

    #[error("malformed input: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
