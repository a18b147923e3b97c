//! The Ramanujan constant function `R(x) = -2 gamma - Psi(x) - Psi(1-x)` on
//! `(0, 1/2]`, the auxiliary functions built from it, and the inequality
//! gaps that feed the sharp constants.
//!
//! Most quantities here are differences of terms that each grow like `1/x`.
//! They are evaluated through `R(x) - 1/x` and `pi x - sin(pi x)`, both of
//! which are computed without cancellation.

use crate::error::{Error, Result};
use crate::special::{digamma, zeta_int, CompensatedSum, EvalConfig, EULER_GAMMA};
use std::f64::consts::PI;

/// Argument of `R`, restricted to `(0, 1/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RArgument(f64);

impl RArgument {
    pub fn new(x: f64) -> Result<Self> {
        if x > 0.0 && x <= 0.5 {
            Ok(RArgument(x))
        } else {
            Err(Error::domain("x", x, "(0, 1/2]"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<crate::special::Param> for RArgument {
    fn from(a: crate::special::Param) -> Self {
        RArgument(a.get())
    }
}

/// Highest `k` used in the odd-zeta expansion.
const SERIES_TERMS: i32 = 40;

fn psi(x: f64) -> f64 {
    digamma(x).expect("argument kept positive by RArgument")
}

/// `R(x)` from digamma.
pub fn r_def(x: RArgument) -> f64 {
    let x = x.0;
    -2.0 * EULER_GAMMA - psi(x) - psi(1.0 - x)
}

/// `R(x)` from `1/x + sum_k 2 zeta(2k+1) x^{2k}`.
pub fn r_series(x: RArgument, cfg: &EvalConfig) -> f64 {
    r_series_terms(x, cfg, 0)
}

/// Odd-zeta expansion, continued for `extra` terms past the point where the
/// tolerance is met (capped at k = 40 either way).
pub(crate) fn r_series_terms(x: RArgument, cfg: &EvalConfig, extra: i32) -> f64 {
    let x = x.0;
    let x2 = x * x;
    let mut acc = CompensatedSum::new(1.0 / x);
    let mut pow = 1.0;
    let mut remaining: Option<i32> = None;
    for k in 1..=SERIES_TERMS {
        pow *= x2;
        let term = 2.0 * zeta_int(2 * k + 1).expect("k >= 1") * pow;
        acc.add(term);
        match remaining {
            Some(0) => break,
            Some(ref mut n) => *n -= 1,
            None if term < cfg.rel_tol() * acc.value() => {
                if extra == 0 {
                    break;
                }
                remaining = Some(extra - 1);
            }
            None => {}
        }
    }
    acc.value()
}

/// `R(x) - 1/x = -2 gamma - Psi(1+x) - Psi(1-x)`.
pub(crate) fn r_excess(x: f64) -> f64 {
    -2.0 * EULER_GAMMA - psi(1.0 + x) - psi(1.0 - x)
}

/// `t - sin t` for `t` in `[0, pi/2]`.
pub(crate) fn t_minus_sin(t: f64) -> f64 {
    if t > 0.5 {
        return t - t.sin();
    }
    // t^3/3! - t^5/5! + ...
    let t2 = t * t;
    let mut term = t * t2 / 6.0;
    let mut acc = term;
    let mut k = 3.0;
    while term.abs() > 1e-18 * acc.abs() {
        term *= -t2 / ((2.0 * k - 2.0) * (2.0 * k - 1.0));
        acc += term;
        k += 1.0;
    }
    acc
}

/// `pi - R(x) sin(pi x)`.
pub(crate) fn pi_minus_rs(x: f64) -> f64 {
    let s = (PI * x).sin();
    t_minus_sin(PI * x) / x - s * r_excess(x)
}

/// `xi(x) = 1/(x(1-x)) - R(x)`.
pub fn xi(x: RArgument) -> f64 {
    let x = x.0;
    1.0 / (1.0 - x) - r_excess(x)
}

/// `eta(x) = (pi/sin(pi x) - R(x)) / (x(1-x))`.
pub fn eta(x: RArgument) -> f64 {
    let x = x.0;
    let t = PI * x;
    let csc_gap = t_minus_sin(t) / (x * t.sin());
    (csc_gap - r_excess(x)) / (x * (1.0 - x))
}

/// `R(x) sin(pi x)`.
pub fn rs_product(x: RArgument) -> f64 {
    r_def(x) * (PI * x.0).sin()
}

/// `sin(pi x) - pi x (1-x)`, which is `pi x^2 - (pi x - sin(pi x))`.
pub(crate) fn sin_minus_quadratic(x: f64) -> f64 {
    PI * x * x - t_minus_sin(PI * x)
}

/// Left side minus right side of
/// `pi/(R sin(pi x)) - 1 > (sin(pi x) - pi x(1-x)) / (sin(pi x)(R - 1))`.
pub fn cor24_gap(x: RArgument) -> f64 {
    let r = r_def(x);
    let s = (PI * x.0).sin();
    pi_minus_rs(x.0) / (r * s) - sin_minus_quadratic(x.0) / (s * (r - 1.0))
}

/// `x(1-x) - (pi - R sin(pi x)) / (R sin(pi x))`.
pub fn cor25_gap(x: RArgument) -> f64 {
    let x0 = x.0;
    x0 * (1.0 - x0) - pi_minus_rs(x0) / rs_product(x)
}

/// `sin(pi x) - (pi x (1-x) / 2)(2 + x(1-x))` on `(0, 1/2]`.
pub fn sine_gap(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 0.5) {
        return Err(Error::domain("x", x, "(0, 1/2]"));
    }
    // the pi x terms cancel exactly; what is left is O(x^2)
    Ok(PI * x * x * (0.5 + x - 0.5 * x * x) - t_minus_sin(PI * x))
}
