//! K-Bessel functions of purely imaginary (and small complex) order.
//!
//! Two quadrature representations cover the whole desk-scale domain without
//! exponential cancellation:
//!
//! * monotone side `x > t`: the integration contour of
//!   `K_it(x) = (1/2) ∫ exp(-x cosh u + i t u) du` is shifted through the
//!   saddle at `u = i asin(t/x)`, giving
//!   `K_it(x) = e^{-t α} ∫_0^∞ e^{-q cosh v} cos(t (sinh v - v)) dv`
//!   with `α = asin(t/x)`, `q = sqrt(x² - t²)`; the integrand scale equals
//!   the value scale, so f64 keeps ~13 digits uniformly.
//! * oscillatory side `x ≤ t`: `K_it(x) = sech(πt/2) ∫_0^∞ cos(x sinh u)
//!   cos(t u) du`, where the exponential smallness sits entirely in the
//!   sech prefactor.  The slowly-decaying oscillatory tail is handled by
//!   rotating the contour upward at a point where `x cosh U` dominates `t`.
//!
//! A leading-order uniform Airy-type asymptotic is kept as an independent
//! large-parameter cross-check (`k_uniform_airy`), matched against the
//! quadrature path at the t = 50 seam in the test suite.

use super::{SfResult, SpecFunError};
use crate::Estimated;
use num_complex::Complex64;
use std::f64::consts::PI;

const T_CEILING: f64 = 500.0;
const EXP_FLOOR: f64 = -745.0;
/// Below this magnitude a result is flushed to exact zero and flagged.
const FLUSH_THRESHOLD: f64 = 1e-300;

/// Result of a K-Bessel evaluation.
///
/// `underflowed` reports the flush-to-zero policy: exponentially small values
/// below 1e-300 come back as exact 0.0 with the flag set, so series
/// truncation logic can key off it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KBessel {
    pub value: f64,
    pub abs_err: f64,
    pub underflowed: bool,
}

const GL16_X: [f64; 8] = [
    0.095_012_509_837_637_44,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_4,
    0.617_876_244_402_643_7,
    0.755_404_408_355_003_0,
    0.865_631_202_387_831_7,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];
const GL16_W: [f64; 8] = [
    0.189_450_610_455_068_5,
    0.182_603_415_044_923_6,
    0.169_156_519_395_002_5,
    0.149_595_988_816_576_7,
    0.124_628_971_255_533_9,
    0.095_158_511_682_492_8,
    0.062_253_523_938_647_9,
    0.027_152_459_411_754_1,
];

fn gl16<F: Fn(f64) -> f64>(a: f64, b: f64, f: &F) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = 0.0;
    for i in 0..8 {
        s += GL16_W[i] * (f(c + h * GL16_X[i]) + f(c - h * GL16_X[i]));
    }
    s * h
}

fn gl16_complex<F: Fn(f64) -> Complex64>(a: f64, b: f64, f: &F) -> Complex64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..8 {
        s += GL16_W[i] * (f(c + h * GL16_X[i]) + f(c - h * GL16_X[i]));
    }
    s * h
}

/// Composite GL16 with panel lengths adapted to a local frequency bound.
fn panel_integrate<F, G>(a: f64, b: f64, f: &F, freq: &G) -> (f64, usize)
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let mut u = a;
    let mut total = 0.0;
    let mut comp = 0.0; // Kahan compensation
    let mut panels = 0;
    while u < b {
        let h = (8.0 / (1.0 + freq(u))).min(0.5);
        let hi = (u + h).min(b);
        let y = gl16(u, hi, f) - comp;
        let t = total + y;
        comp = (t - total) - y;
        total = t;
        u = hi;
        panels += 1;
    }
    (total, panels)
}

/// K_{it}(x) for real t, x > 0.  Real-valued; relative error ~1e-12 on the
/// quadrature domain (|t| <= 500, x >= 1e-3) away from the flush regime.
pub fn bessel_k_imag_order(t: f64, x: f64) -> SfResult<KBessel> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecFunError::OutOfDomain(format!(
            "K_it requires x > 0, got {x}"
        )));
    }
    if !t.is_finite() || t.abs() > T_CEILING {
        return Err(SpecFunError::OutOfDomain(format!(
            "|t| = {} above the desk ceiling 500",
            t.abs()
        )));
    }
    let t = t.abs();
    // exact decay exponent: pi t / 2 on the oscillatory side, t asin(t/x) +
    // sqrt(x^2 - t^2) on the monotone side
    let exponent = if x > t {
        let q = (x * x - t * t).sqrt();
        t * (t / x).asin() + q
    } else {
        PI * t / 2.0
    };
    if exponent > 710.0 {
        return Ok(KBessel {
            value: 0.0,
            abs_err: FLUSH_THRESHOLD,
            underflowed: true,
        });
    }
    let out = if x > t + 0.5 {
        k_monotone_shifted(t, x)
    } else {
        k_oscillatory(t, x)
    };
    if out.value != 0.0 && out.value.abs() < FLUSH_THRESHOLD {
        return Ok(KBessel {
            value: 0.0,
            abs_err: FLUSH_THRESHOLD,
            underflowed: true,
        });
    }
    Ok(out)
}

/// Saddle-shifted contour, x > t.
fn k_monotone_shifted(t: f64, x: f64) -> KBessel {
    let alpha = if t > 0.0 { (t / x).asin() } else { 0.0 };
    let q = (x * x - t * t).sqrt();
    // e^{-q cosh v} support
    let vmax = if q >= -EXP_FLOOR { 0.0 } else { ((-EXP_FLOOR) / q).acosh() };
    let f = |v: f64| (-q * v.cosh()).exp() * (t * (v.sinh() - v)).cos();
    let freq = |v: f64| t * (v.cosh() - 1.0);
    let (integral, panels) = panel_integrate(0.0, vmax.max(1e-12), &f, &freq);
    let prefactor = (-t * alpha).exp();
    let value = prefactor * integral;
    let abs_err = prefactor
        * ((-q).exp() * 3e-16 * (panels as f64).sqrt().max(1.0) + 1e-302)
        + 1e-15 * value.abs();
    KBessel {
        value,
        abs_err,
        underflowed: false,
    }
}

/// sech-prefactored oscillatory representation, x <= t + 1/2.
fn k_oscillatory(t: f64, x: f64) -> KBessel {
    // rotate the tail where x cosh U = 2t + 90 so both e^{±itu} pieces decay
    let target = 2.0 * t + 90.0;
    let u_turn = (target / x).acosh();
    let xs = x * u_turn.sinh();

    // real leg: cos(x sinh u) cos(t u) on [0, U]
    let f_real = |u: f64| (x * u.sinh()).cos() * (t * u).cos();
    let freq_real = |u: f64| x * u.cosh() + t;
    let (real_leg, panels) = panel_integrate(0.0, u_turn, &f_real, &freq_real);

    // vertical legs u = U + i v, v in [0, pi/2], for e^{i(x sinh u ± t u)};
    // sinh(U + iv) = sinh U cos v + i cosh U sin v
    let vert = |sign: f64| -> Complex64 {
        let f = |v: f64| -> Complex64 {
            let (sv, cv) = (v.sin(), v.cos());
            let phase_re = -x * u_turn.cosh() * sv - sign * t * v;
            let phase_im = x * u_turn.sinh() * cv + sign * t * u_turn;
            Complex64::new(0.0, 1.0) * (Complex64::new(phase_re, phase_im)).exp()
        };
        let mut v = 0.0;
        let mut acc = Complex64::new(0.0, 0.0);
        while v < PI / 2.0 {
            let h = (8.0 / (1.0 + xs)).min(0.25);
            let hi = (v + h).min(PI / 2.0);
            acc += gl16_complex(v, hi, &f);
            v = hi;
        }
        acc
    };
    let j_integral = real_leg + 0.5 * (vert(1.0) + vert(-1.0)).re;

    // K = J * sech(pi t / 2), assembled in log space to dodge cosh overflow
    let ln_sech = (2.0f64).ln() - PI * t / 2.0 - (-PI * t).exp().ln_1p();
    let sech = ln_sech.exp();
    let value = j_integral * sech;
    let abs_err = sech * (3e-16 * (u_turn + 2.0) * (panels as f64).sqrt().max(1.0) + (-85.0f64).exp())
        + 1e-15 * value.abs();
    KBessel {
        value,
        abs_err,
        underflowed: false,
    }
}

/// K_nu(x) for complex order by the defining integral
/// `∫_0^∞ e^{-x cosh u} cosh(nu u) du`.
///
/// Intended for the small orders arising in Eisenstein Fourier tails
/// (|Re nu| <= 3, |Im nu| <= ~4); the error estimate carries the
/// cancellation loss e^{pi |Im nu| / 2 - x} honestly, so callers can see
/// when the imaginary-order path should be used instead.
pub fn bessel_k_complex_order(nu: Complex64, x: f64) -> SfResult<Estimated<Complex64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecFunError::OutOfDomain(format!(
            "K_nu requires x > 0, got {x}"
        )));
    }
    if nu.re.abs() > 6.0 || nu.im.abs() > 50.0 {
        return Err(SpecFunError::OutOfDomain(format!(
            "complex order {nu} outside the supported window"
        )));
    }
    if nu.im == 0.0 && nu.re == 0.0 {
        let k = bessel_k_imag_order(0.0, x)?;
        return Ok(Estimated::new(Complex64::new(k.value, 0.0), k.abs_err));
    }
    // u_max: x cosh u - |Re nu| u = 745, two fixed-point rounds
    let ra = nu.re.abs();
    let mut umax = ((-EXP_FLOOR).max(x * 1.001) / x).acosh().max(1e-9);
    for _ in 0..3 {
        umax = (((-EXP_FLOOR) + ra * umax) / x).acosh().max(1e-9);
    }
    let f = |u: f64| -> Complex64 {
        let e = (-x * u.cosh()).exp();
        let w = nu * u;
        e * w.cosh()
    };
    let freq = |_u: f64| nu.im.abs();
    let mut u = 0.0;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    let mut panels = 0usize;
    while u < umax {
        let h = (8.0 / (1.0 + freq(u))).min(0.5);
        let hi = (u + h).min(umax);
        acc += gl16_complex(u, hi, &f);
        scale = scale.max((-x * u.cosh()).exp() * (ra * u).exp());
        u = hi;
        panels += 1;
    }
    let abs_err = 3e-16 * scale * (panels as f64).sqrt().max(1.0) * umax.max(1.0)
        + 1e-15 * acc.norm();
    Ok(Estimated::new(acc, abs_err))
}

/// Airy function Ai on the real line.
pub fn airy_ai(y: f64) -> f64 {
    if y >= 6.0 {
        let zeta = 2.0 / 3.0 * y.powf(1.5);
        let mut s = 0.0;
        let mut uk = 1.0;
        for k in 0..=6 {
            if k > 0 {
                let kf = k as f64;
                uk *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
                    / (216.0 * kf * (2.0 * kf - 1.0));
            }
            s += if k % 2 == 0 { uk } else { -uk } / zeta.powi(k as i32);
        }
        (-zeta).exp() / (2.0 * PI.sqrt() * y.powf(0.25)) * s
    } else if y <= -6.0 {
        let w = -y;
        let zeta = 2.0 / 3.0 * w.powf(1.5);
        let mut uks = [0.0f64; 8];
        uks[0] = 1.0;
        for k in 1..8 {
            let kf = k as f64;
            uks[k] = uks[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
                / (216.0 * kf * (2.0 * kf - 1.0));
        }
        let mut even = 0.0;
        let mut odd = 0.0;
        for k in 0..3 {
            let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
            even += sgn * uks[2 * k] / zeta.powi(2 * k as i32);
            odd += sgn * uks[2 * k + 1] / zeta.powi(2 * k as i32 + 1);
        }
        ((zeta - PI / 4.0).cos() * even + (zeta - PI / 4.0).sin() * odd)
            / (PI.sqrt() * w.powf(0.25))
    } else {
        // rotated contour: Ai(y) = (1/pi) Re e^{i pi/6} ∫ e^{-v^3/3 - yv/2}
        //                                  e^{i sqrt3 y v / 2} dv
        let rot = Complex64::from_polar(1.0, PI / 6.0);
        let f = |v: f64| -> Complex64 {
            let m = (-v * v * v / 3.0 - y * v / 2.0).exp();
            m * Complex64::from_polar(1.0, 3.0f64.sqrt() * y * v / 2.0)
        };
        let mut acc = Complex64::new(0.0, 0.0);
        let mut v = 0.0;
        while v < 9.0 {
            acc += gl16_complex(v, v + 0.25, &f);
            v += 0.25;
        }
        (rot * acc).re / PI
    }
}

/// Leading-order uniform Airy-type asymptotic for K_{it}(x), t large.
///
/// Relative accuracy O(1/t); kept as the independent large-parameter
/// cross-check for the machine-accurate quadrature path, with the seam
/// comparison pinned in the test suite.
pub fn k_uniform_airy(t: f64, x: f64) -> SfResult<KBessel> {
    if !(x > 0.0) || t < 10.0 {
        return Err(SpecFunError::OutOfDomain(
            "uniform asymptotic needs t >= 10, x > 0".into(),
        ));
    }
    let z = x / t;
    let delta = z - 1.0;
    let (zeta, ratio) = if delta.abs() <= 1e-4 {
        let zeta = 2.0f64.cbrt() * delta * (1.0 - 0.3 * delta);
        let ratio = 2.0f64.powf(-2.0 / 3.0) * (1.0 - 0.8 * delta);
        (zeta, ratio)
    } else if z > 1.0 {
        let w = (z * z - 1.0).sqrt() - (1.0 / z).acos();
        let zeta = (1.5 * w).powf(2.0 / 3.0);
        (zeta, zeta / (z * z - 1.0))
    } else {
        let s = (1.0 - z * z).sqrt();
        let w = ((1.0 + s) / z).ln() - s;
        let zeta = -(1.5 * w).powf(2.0 / 3.0);
        (zeta, zeta / (z * z - 1.0))
    };
    let y_arg = t.powf(2.0 / 3.0) * zeta;
    let pref_ln = (PI * 2.0f64.sqrt()).ln() - t.ln() / 3.0 + 0.25 * ratio.ln();
    if y_arg > 4.0 {
        // keep everything in logs on the decaying side
        let zeta_a = 2.0 / 3.0 * y_arg.powf(1.5);
        let ai_ln = -zeta_a - (2.0 * PI.sqrt()).ln() - 0.25 * y_arg.ln();
        let corr = airy_ai(y_arg) * (zeta_a).exp() * 2.0 * PI.sqrt() * y_arg.powf(0.25);
        let ln_val = pref_ln - PI * t / 2.0 + ai_ln + corr.ln();
        if ln_val < -690.0 {
            return Ok(KBessel {
                value: 0.0,
                abs_err: FLUSH_THRESHOLD,
                underflowed: true,
            });
        }
        let value = ln_val.exp();
        Ok(KBessel {
            value,
            abs_err: value * 1.0 / t,
            underflowed: false,
        })
    } else {
        let value = pref_ln.exp() * (-PI * t / 2.0).exp() * airy_ai(y_arg);
        if value == 0.0 {
            return Ok(KBessel {
                value: 0.0,
                abs_err: FLUSH_THRESHOLD,
                underflowed: true,
            });
        }
        Ok(KBessel {
            value,
            abs_err: value.abs() / t + 1e-305,
            underflowed: false,
        })
    }
}
