pub mod dispersion;
pub mod error;
pub mod limits;
pub mod oracle;
pub mod quadrature;
pub mod response;
pub mod roots;
pub mod scalar;
pub mod units;
pub mod specfun;

pub use error::{Error, Result};
pub use scalar::Real;

pub type CondensateParams64 = dispersion::CondensateParams<f64>;
pub type DetectorOrbit64 = response::DetectorOrbit<f64>;
pub type RateResult64 = response::RateResult<f64>;
pub type TemperaturePoint64 = response::TemperaturePoint<f64>;
pub type LiLimitResult64 = limits::LiLimitResult<f64>;
