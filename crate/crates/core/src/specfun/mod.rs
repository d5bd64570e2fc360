//! Special functions needed by the dispersion and the mode sums.
//!
//! * [`scaled_erfc`]: `w(x) = exp(x^2) erfc(x)` for `x >= 0`.
//! * [`bessel_j`]: integer-order Bessel functions of the first kind for
//!   orders and arguments up to `1e6`.
//!
//! # Bessel evaluation scheme
//!
//! `J_n(x)` for `n >= 0` picks the first applicable branch:
//!
//! 1. `x^2 <= 0.4 (n + 1)`: ascending power series. The prefactor
//!    `(x/2)^n / n!` is built as a running product, so deep-evanescent values
//!    underflow to zero instead of overflowing intermediates.
//! 2. `n >= 30`: Debye expansion (evanescent `x < n` or oscillatory `x > n`)
//!    with up to 13 terms. It is accepted only when the last retained term is
//!    below machine epsilon relative to the sum, which rejects the transition
//!    zone `x ≈ n`.
//! 3. `n < 30`, `x >= 30 + 2 n^2`: Hankel asymptotic expansion, same
//!    acceptance rule.
//! 4. Otherwise: Miller backward recurrence started above `max(n, x)` and
//!    normalised with `J_0 + 2 Σ J_2k = 1`, rescaling whenever the iterate
//!    exceeds `sqrt(MAX)`. Forward recurrence is never used.

mod bessel;
mod erfc;

pub use bessel::{bessel_j, bessel_j_sq, MAX_ARGUMENT, MAX_ORDER};
pub use erfc::scaled_erfc;

pub(crate) use bessel::{bessel_j_unchecked, kapteyn_log_bound};
pub(crate) use erfc::scaled_erfc_unchecked;

/// Relative accuracy target for special-function outputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accuracy {
    rel_tol: f64,
}

impl Accuracy {
    pub fn new(rel_tol: f64) -> crate::Result<Self> {
        if rel_tol > 0.0 && rel_tol < 1e-6 {
            Ok(Self { rel_tol })
        } else {
            Err(crate::error::domain("accuracy must lie in (0, 1e-6)", rel_tol))
        }
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }
}

impl Default for Accuracy {
    fn default() -> Self {
        Self { rel_tol: 1e-12 }
    }
}
