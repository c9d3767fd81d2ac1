//! Completed zeta  xi(s) = pi^{-s/2} Gamma(s/2) zeta(s)  and its log
//! derivative, plus the scattering coefficient xi(2s-1)/xi(2s) and the
//! Laurent constant of (s-1)^{-1} xi(s) at s = 1.
//!
//! Values are assembled in log space so ratios at large height stay usable
//! after |Gamma| has decayed below the f64 floor.

use super::{log_gamma, zeta, zeta_est, zeta_log_derivative};
use super::{SfResult, SpecFunError};
use crate::Estimated;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

fn check_xi_domain(s: Complex64) -> SfResult<()> {
    if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
        return Err(SpecFunError::XiPole(s));
    }
    if s.re <= 0.0 {
        return Err(SpecFunError::OutOfDomain(format!(
            "xi evaluated for Re(s) > 0 only, got {s}; use the functional equation"
        )));
    }
    Ok(())
}

/// log xi(s) = -(s/2) log pi + log Gamma(s/2) + Log zeta(s).
pub fn xi_log(s: Complex64) -> SfResult<Complex64> {
    check_xi_domain(s)?;
    let lg = log_gamma(s / 2.0)?;
    let z = zeta(s)?;
    Ok(-s / 2.0 * PI.ln() + lg + z.ln())
}

pub fn xi_completed(s: Complex64) -> SfResult<Complex64> {
    Ok(xi_completed_est(s)?.value)
}

pub fn xi_completed_est(s: Complex64) -> SfResult<Estimated<Complex64>> {
    check_xi_domain(s)?;
    let lg = super::log_gamma_est(s / 2.0)?;
    let z = zeta_est(s)?;
    let pref = (-s / 2.0 * PI.ln() + lg.value).exp();
    let value = pref * z.value;
    let err = pref.norm() * z.abs_err + value.norm() * (lg.abs_err + 1e-15);
    Ok(Estimated::new(value, err))
}

/// xi(a) / xi(b) computed by exponentiating the log difference.
pub fn xi_ratio(a: Complex64, b: Complex64) -> SfResult<Complex64> {
    Ok((xi_log(a)? - xi_log(b)?).exp())
}

/// xi'/xi(s) = -(1/2) log pi + (1/2) psi(s/2) + zeta'/zeta(s).
pub fn xi_log_derivative(s: Complex64) -> SfResult<Complex64> {
    Ok(xi_log_derivative_est(s)?.value)
}

pub fn xi_log_derivative_est(s: Complex64) -> SfResult<Estimated<Complex64>> {
    check_xi_domain(s)?;
    let psi = super::digamma_est(s / 2.0)?;
    let zl = zeta_log_derivative(s)?;
    let value = -0.5 * PI.ln() + 0.5 * psi.value + zl;
    let err = 0.5 * psi.abs_err + 1e-12 * (1.0 + zl.norm());
    Ok(Estimated::new(value, err))
}

/// Scattering coefficient phi(s) = xi(2s-1)/xi(2s), with the reflection
/// xi(w) = xi(1-w) applied when 2s-1 leaves the evaluation half-plane.
pub fn scattering_phi(s: Complex64) -> SfResult<Complex64> {
    let num_arg = 2.0 * s - 1.0;
    let num = if num_arg.re > 0.25 {
        xi_log(num_arg)?
    } else {
        xi_log(Complex64::new(1.0, 0.0) - num_arg)?
    };
    Ok((num - xi_log(2.0 * s)?).exp())
}

/// The constant c0 in (s-1)^{-1} xi(s) = (s-1)^{-2} + c0 (s-1)^{-1} + O(1),
/// i.e. c0 = lim_{s->1} (xi(s) - 1/(s-1)), found by Richardson extrapolation
/// of the limit rather than a hard-coded closed form.
pub fn xi_laurent_constant() -> f64 {
    static CACHE: OnceLock<f64> = OnceLock::new();
    *CACHE.get_or_init(|| {
        let f = |h: f64| xi_completed(Complex64::new(1.0 + h, 0.0)).unwrap().re - 1.0 / h;
        // xi(1+h) - 1/h = c0 + c1 h + c2 h^2 + ...; eliminate h and h^2
        let mut vals: Vec<f64> = (0..4).map(|k| f(1e-3 / (1 << k) as f64)).collect();
        for level in 1..4 {
            let p = (1 << level) as f64;
            for i in 0..(4 - level) {
                vals[i] = (p * vals[i + 1] - vals[i]) / (p - 1.0);
            }
        }
        vals[0]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn xi_at_two_is_pi_over_six() {
        let v = xi_completed(c(2.0, 0.0)).unwrap();
        assert!((v.re - PI / 6.0).abs() < 1e-14, "{v}");
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn xi_at_half_componentwise() {
        // xi(1/2) = pi^{-1/4} Gamma(1/4) zeta(1/2), assembled from the pieces
        let expected = (-0.25 * PI.ln() + log_gamma(c(0.25, 0.0)).unwrap().re).exp()
            * zeta(c(0.5, 0.0)).unwrap().re;
        let v = xi_completed(c(0.5, 0.0)).unwrap();
        assert!((v.re - expected).abs() < 1e-12 * expected.abs());
        assert!(v.re < 0.0); // zeta(1/2) < 0
    }

    #[test]
    fn reflection_symmetry_on_critical_line() {
        // |xi(1/2 + it)| = |xi(1/2 - it)| via conjugation
        let t = 7.3;
        let a = xi_completed(c(0.5, t)).unwrap();
        let b = xi_completed(c(0.5, -t)).unwrap();
        assert!((a.norm() - b.norm()).abs() < 1e-12 * a.norm());
        assert!((a - b.conj()).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn functional_equation_in_strip() {
        // xi(s) = xi(1-s); both arguments stay in Re > 0
        for &s in &[c(0.3, 2.0), c(0.7, -5.0), c(0.2, 11.0), c(0.5, 3.3)] {
            let a = xi_completed(s).unwrap();
            let b = xi_completed(C::new(1.0, 0.0) - s).unwrap();
            assert!((a - b).norm() <= 1e-9 * a.norm(), "at {s}: {a} vs {b}");
        }
    }

    #[test]
    fn log_derivative_finite_difference_oracle() {
        // xi'/xi(4) against central difference of log xi
        let s = c(4.0, 0.0);
        let h = 1e-5;
        let fd = (xi_log(s + h).unwrap() - xi_log(s - h).unwrap()) / (2.0 * h);
        let an = xi_log_derivative(s).unwrap();
        assert!((fd - an).norm() < 1e-8, "{fd} vs {an}");
    }

    #[test]
    fn log_derivative_functional_antisymmetry() {
        // xi'/xi(s) + xi'/xi(1-s) = 0 at s = 1/2 + 5i ... 1-s = 1/2 - 5i
        let s = c(0.5, 5.0);
        let a = xi_log_derivative(s).unwrap();
        let b = xi_log_derivative(C::new(1.0, 0.0) - s).unwrap();
        assert!((a + b).norm() < 1e-9, "{a} + {b}");
    }

    #[test]
    fn log_derivative_grows_like_half_log_t() {
        // Re xi'/xi(1 + 2 i 100) positive and near (1/2) log 100
        let v = xi_log_derivative(c(1.0, 200.0)).unwrap();
        assert!(v.re > 0.0);
        assert!((v.re - 0.5 * 100.0f64.ln()).abs() < 1.5, "{v}");
    }

    #[test]
    fn laurent_constant_against_closed_form() {
        // c0 = gamma/2 ... independent closed form gamma - (1/2) log(4 pi)
        let gamma = 0.577_215_664_901_532_9;
        let closed = gamma - 0.5 * (4.0 * PI).ln();
        let c0 = xi_laurent_constant();
        assert!((c0 - closed).abs() < 1e-9, "{c0} vs {closed}");
    }

    #[test]
    fn scattering_phi_unimodular_on_critical_line() {
        for &t in &[1.0, 5.0, 8.0, 17.0] {
            let v = scattering_phi(c(0.5, t)).unwrap();
            assert!((v.norm() - 1.0).abs() < 1e-9, "t={t}: |phi|={}", v.norm());
        }
    }

    #[test]
    fn pole_errors() {
        assert!(xi_completed(c(1.0, 0.0)).is_err());
        assert!(xi_completed(c(0.0, 0.0)).is_err());
    }
}
