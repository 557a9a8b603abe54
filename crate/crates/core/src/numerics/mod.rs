//! Shared numerical kernels: adaptive Runge-Kutta integration, adaptive
//! Simpson quadrature, Richardson extrapolation and truncated Laurent series.

pub mod ode;
pub mod quad;
pub mod richardson;
pub mod series;

pub use ode::{integrate, Control, OdeError, OdeOptions};
pub use quad::{adaptive_simpson, simpson_nonuniform};
pub use richardson::richardson;
pub use series::LaurentSeries;
