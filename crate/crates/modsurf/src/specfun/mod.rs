//! Self-contained special-function kernel.
//!
//! Everything here is pure and reentrant.  Transcendental evaluators expose
//! an `*_est` variant carrying an absolute-error estimate; the plain variant
//! discards it.

mod bessel;
mod divisors;
mod gamma;
mod sieve;
mod xi;
mod zeta;

pub use bessel::{airy_ai, bessel_k_complex_order, bessel_k_imag_order, KBessel};
pub use divisors::{divisor_count, divisor_sigma, eta_coefficient};
pub use gamma::{digamma, digamma_est, log_gamma, log_gamma_est};
pub use sieve::{sieve, PrimeTable};
pub use xi::{
    scattering_phi, xi_completed, xi_completed_est, xi_laurent_constant, xi_log,
    xi_log_derivative, xi_log_derivative_est, xi_ratio,
};
pub use zeta::{zeta, zeta_deriv, zeta_est, zeta_log_derivative};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SpecFunError {
    #[error("pole at non-positive integer argument {0}")]
    GammaPole(Complex64),
    #[error("zeta pole at s = 1")]
    ZetaPole,
    #[error("argument outside supported domain: {0}")]
    OutOfDomain(String),
    #[error("zeta is numerically zero near s = {0}; log-derivative unreliable")]
    NearZetaZero(Complex64),
    #[error("completed xi has a pole at s = {0}")]
    XiPole(Complex64),
    #[error("sieve limit {0} exceeds the supported ceiling")]
    SieveLimit(u64),
    #[error("gamma argument {0} within {1} of a pole")]
    PoleProximity(Complex64, f64),
}

pub type SfResult<T> = Result<T, SpecFunError>;

/// Bernoulli numbers B_2, B_4, ..., B_60.
pub(crate) const BERNOULLI_2K: [f64; 30] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
    1520097643918070802691.0 / 1806.0,
    -27833269579301024235023.0 / 690.0,
    596451111593912163277961.0 / 282.0,
    -5609403368997817686249127547.0 / 46410.0,
    495057205241079648212477525.0 / 66.0,
    -801165718135489957347924991853.0 / 1590.0,
    29149963634884862421418123812691.0 / 798.0,
    -2479392929313226753685415739663229.0 / 870.0,
    84483613348880041862046775994036021.0 / 354.0,
    -1215233140483755572040304994079820246041491.0 / 56786730.0,
];

pub(crate) fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}
