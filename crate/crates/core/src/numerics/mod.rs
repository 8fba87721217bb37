//! Quadrature, Matsubara summation and the trilogarithm.

mod polylog;
mod quadrature;
mod series;

pub use polylog::{polylog3, ZETA_3};
pub use quadrature::{integrate_semi_infinite, Integral, QuadratureSpec};
pub use series::{
    sum_matsubara, sum_matsubara_multi, sum_matsubara_par, SeriesSpec, SeriesSum, QUIET_RUN,
};

pub(crate) use polylog::li3_unchecked;
