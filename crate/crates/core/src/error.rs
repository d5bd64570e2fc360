use thiserror::Error;

/// Errors raised by the numerical engine.
///
/// Payloads are carried as `f64` regardless of the scalar type so the error
/// type stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("unstable spectrum: f^2 = {f_squared} < 0 at zeta = {zeta}")]
    Instability { zeta: f64, f_squared: f64 },

    #[error("mode sum did not converge after {terms} harmonics (partial value {partial}, tail bound {tail_bound})")]
    Truncation {
        terms: u64,
        partial: f64,
        tail_bound: f64,
    },

    #[error("root bracketing failed on {interval}: {detail}")]
    Bracket {
        interval: &'static str,
        detail: String,
    },

    #[error("cutoff insufficient: boundary mass fraction {fraction} exceeds {limit}")]
    Cutoff { fraction: f64, limit: f64 },

    #[error("physical constraint violated: {constraint} (value {value})")]
    Physical {
        constraint: &'static str,
        value: f64,
    },

    #[error("quadrature did not converge: achieved residual {residual}, requested {requested}")]
    NonConvergence { residual: f64, requested: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64) -> Error {
    Error::Domain { what, value }
}
