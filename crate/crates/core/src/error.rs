use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("x must be > 0 (got {0})")]
    NonPositiveArgument(f64),

    #[error("{what} must be finite (got {value})")]
    NonFinite { what: &'static str, value: f64 },

    #[error("tolerance must be > 0 (got {0})")]
    NonPositiveTolerance(f64),

    #[error("tolerance {requested:e} is below the double-precision floor {floor:e} at this point")]
    ToleranceUnachievable { requested: f64, floor: f64 },

    #[error("tolerance {tol:e} unreachable within {max} terms")]
    TermLimit { tol: f64, max: usize },

    #[error("gamma function has a pole at {re} + {im}i")]
    GammaPole { re: f64, im: f64 },

    #[error("beta must be nonzero")]
    ZeroBeta,

    #[error("c must be >= 0 (got {0})")]
    NegativeC(f64),

    #[error("Kantorovich-Lebedev quadrature is unreliable for x < {min} (got {x})")]
    QuadratureUnreliable { x: f64, min: f64 },
}
