//! Numerical toolkit for automorphic objects on the modular surface:
//! Eisenstein series (full, truncated, normalized), Hecke–Maass cusp forms,
//! hyperbolic quadrature and regularized integrals, closed-form main terms
//! and identities, piecewise archimedean exponent bounds, and the prime-sum
//! density layer — each evaluator paired with an independent brute-force
//! oracle at desk scale.
//!
//! Layout:
//! * [`specfun`] — complex log-Gamma, digamma, zeta, completed xi, K-Bessel
//!   of imaginary order, prime sieve, divisor sums.
//! * [`forms`] — Eisenstein and Maass evaluation, fundamental-domain
//!   reduction.
//! * [`quadrature`] — hyperbolic integration over the fundamental domain and
//!   growth-subtracted regularized integrals.
//! * [`formulas`] — closed-form evaluators (truncated-norm identity, triple
//!   products, Bessel Mellin transforms, residue terms, decorrelation).
//! * [`exponents`] — piecewise exponent functions and Stirling envelopes.
//! * [`momentlab`] — Satake/Hecke coefficient combinatorics and the
//!   moment-exponent calculator.
//! * [`ingest`] — fixture and LMFDB acquisition of Maass form data.
//! * [`verify`] — the named check suites behind `modsurf verify`.

pub mod exponents;
pub mod forms;
pub mod formulas;
pub mod ingest;
pub mod momentlab;
pub mod oracles;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use num_complex::Complex64;

/// A value together with an absolute-error estimate.
///
/// Transcendental kernels return this so downstream consumers can propagate
/// uncertainty additively instead of guessing tolerances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimated<T> {
    pub value: T,
    pub abs_err: f64,
}

impl<T> Estimated<T> {
    pub fn new(value: T, abs_err: f64) -> Self {
        Self { value, abs_err }
    }
}
