//! Generalized complete elliptic integrals
//!
//! ```text
//! K_a(r) = (pi/2) F(a, 1-a; 1; r^2)
//! E_a(r) = (pi/2) F(a-1, 1-a; 1; r^2)
//! ```
//!
//! together with their closed-form derivatives and the combination
//! `E_a - r'^2 K_a`, which is evaluated from its own series rather than by
//! subtraction.
//!
//! Two regimes are used. For `r'^2 >= near_one_cut` everything is a power
//! series in `r^2`. Below the cut the logarithmic expansion in `r'^2` takes
//! over; `E_a` is then assembled as `(E_a - r'^2 K_a) + r'^2 K_a`, where the
//! first piece has a regular expansion of its own.

use crate::error::{Error, Result};
use crate::special::{hyp2f1_series, sum_ratio_series, EvalConfig, NearOne, Param};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

/// Public evaluators refuse points with `r'^2` below this; `K_a` diverges at `r = 1`.
pub const MIN_RP2: f64 = 1e-14;

/// A modulus `r` together with `r^2` and `r'^2 = 1 - r^2`.
///
/// Built from `r` the complement is formed as `(1-r)(1+r)`; built from
/// `r'^2` the modulus is derived, so `r` may round to exactly 1 when `r'^2`
/// is tiny even though the point itself is interior.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModulusPoint {
    r: f64,
    r2: f64,
    rp2: f64,
}

impl ModulusPoint {
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::domain("r", r, "(0, 1)"));
        }
        Ok(ModulusPoint {
            r,
            r2: r * r,
            rp2: (1.0 - r) * (1.0 + r),
        })
    }

    /// Point with complementary modulus squared `rp2`.
    pub fn from_rp2(rp2: f64) -> Result<Self> {
        if !(rp2 > 0.0 && rp2 < 1.0) {
            return Err(Error::domain("r'^2", rp2, "(0, 1)"));
        }
        let r2 = 1.0 - rp2;
        Ok(ModulusPoint { r: r2.sqrt(), r2, rp2 })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    pub fn rp2(&self) -> f64 {
        self.rp2
    }

    /// `-log(r'^2)`, accurate at both ends of `(0, 1)`.
    pub fn neg_log_rp2(&self) -> f64 {
        if self.r2 < 0.5 {
            -(-self.r2).ln_1p()
        } else {
            -self.rp2.ln()
        }
    }

    pub(crate) fn near_one(&self, cfg: &EvalConfig) -> bool {
        self.rp2 < cfg.near_one_cut()
    }
}

fn resolvable(p: &ModulusPoint) -> Result<()> {
    if p.rp2 < MIN_RP2 {
        return Err(Error::domain(
            "r'^2",
            p.rp2,
            format!("[{MIN_RP2:e}, 1); K_a diverges at r = 1"),
        ));
    }
    Ok(())
}

pub(crate) fn near_one_series<'c>(a: Param, p: &ModulusPoint, cfg: &'c EvalConfig) -> Result<NearOne<'c>> {
    NearOne::new(a, p.rp2, -p.neg_log_rp2(), cfg)
}

/// `K_a(r)`.
pub fn ellk_gen(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    resolvable(&p)?;
    k_value(a, &p, cfg)
}

/// `E_a(r)`.
pub fn elle_gen(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    resolvable(&p)?;
    e_value(a, &p, cfg)
}

/// `E_a(1) = sin(pi a) / (2(1-a))`.
pub fn elle_gen_at_one(a: Param) -> f64 {
    a.sin_pi() / (2.0 * (1.0 - a.get()))
}

/// `E_a - r'^2 K_a`, positive and `O(r^2)` as `r -> 0`.
pub fn em_combo(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    resolvable(&p)?;
    Ok(p.r2 * em_scaled(a, &p, cfg)?)
}

/// `dK_a/dr = 2(1-a)(E_a - r'^2 K_a) / (r r'^2)`.
pub fn d_ellk_gen(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    resolvable(&p)?;
    let e = em_scaled(a, &p, cfg)?;
    Ok(2.0 * (1.0 - a.get()) * p.r * e / p.rp2)
}

/// `dE_a/dr = -2(1-a)(K_a - E_a) / r`.
pub fn d_elle_gen(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    resolvable(&p)?;
    // K - E = r^2 K - (E - r'^2 K) = r^2 (K - em/r^2)
    let k = k_value(a, &p, cfg)?;
    let e = em_scaled(a, &p, cfg)?;
    Ok(-2.0 * (1.0 - a.get()) * p.r * (k - e))
}

pub(crate) fn k_value(a: Param, p: &ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    if p.near_one(cfg) {
        Ok(0.5 * a.sin_pi() * near_one_series(a, p, cfg)?.k_sum(false)?)
    } else {
        let av = a.get();
        Ok(FRAC_PI_2 * hyp2f1_series(av, 1.0 - av, 1.0, p.r2, cfg)?)
    }
}

pub(crate) fn e_value(a: Param, p: &ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    if p.near_one(cfg) {
        Ok(p.r2 * em_scaled(a, p, cfg)? + p.rp2 * k_value(a, p, cfg)?)
    } else {
        let av = a.get();
        Ok(FRAC_PI_2 * hyp2f1_series(av - 1.0, 1.0 - av, 1.0, p.r2, cfg)?)
    }
}

/// `(E_a - r'^2 K_a) / r^2`.
///
/// Away from `r = 1` this is `(pi a / 2) F(a, 1-a; 2; r^2)`.
pub(crate) fn em_scaled(a: Param, p: &ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    let av = a.get();
    if p.near_one(cfg) {
        let sum = near_one_series(a, p, cfg)?.em_sum(false)?;
        Ok(a.sin_pi() / (2.0 * (1.0 - av)) * sum)
    } else {
        Ok(0.5 * PI * av * hyp2f1_series(av, 1.0 - av, 2.0, p.r2, cfg)?)
    }
}

/// `K_a - pi/2`, without cancellation for small `r`.
pub(crate) fn k_excess(a: Param, p: &ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    if p.near_one(cfg) {
        return Ok(k_value(a, p, cfg)? - FRAC_PI_2);
    }
    let av = a.get();
    let x = p.r2;
    // sum_{n>=1} k_n x^n with k_n = ((a)_n (1-a)_n) / (n!)^2
    let tail = sum_ratio_series("K_a excess series", av * (1.0 - av) * x, cfg, |n| {
        (av + n + 1.0) * (2.0 - av + n) / ((n + 2.0) * (n + 2.0)) * x
    })?;
    Ok(FRAC_PI_2 * tail)
}

/// `K_a - sin(pi a) log(e^{R(a)/2} / r')`, without cancellation near `r = 1`.
///
/// `half_log` is `R(a)/2 + (-log r'^2)/2`, supplied by the caller.
pub(crate) fn k_log_gap(a: Param, p: &ModulusPoint, half_log: f64, cfg: &EvalConfig) -> Result<f64> {
    let s = a.sin_pi();
    if p.near_one(cfg) {
        Ok(0.5 * s * near_one_series(a, p, cfg)?.k_sum(true)?)
    } else {
        Ok(k_value(a, p, cfg)? - s * half_log)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn agm_k(r: f64) -> f64 {
        let (mut x, mut y) = (1.0f64, ((1.0 - r) * (1.0 + r)).sqrt());
        for _ in 0..64 {
            let m = 0.5 * (x + y);
            y = (x * y).sqrt();
            x = m;
        }
        PI / (2.0 * x)
    }

    /// Adaptive Simpson on `sqrt(1 - r^2 sin^2 t)` over `[0, pi/2]`.
    fn legendre_e_quadrature(r: f64) -> f64 {
        #[allow(clippy::too_many_arguments)]
        fn simpson(
            f: &dyn Fn(f64) -> f64,
            a: f64,
            b: f64,
            fa: f64,
            fm: f64,
            fb: f64,
            whole: f64,
            tol: f64,
            depth: u32,
        ) -> f64 {
            let m = 0.5 * (a + b);
            let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
            let (flm, frm) = (f(lm), f(rm));
            let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
                left + right + (left + right - whole) / 15.0
            } else {
                simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                    + simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
            }
        }
        let f = move |t: f64| (1.0 - r * r * t.sin().powi(2)).sqrt();
        let (a, b) = (0.0, FRAC_PI_2);
        let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        simpson(&f, a, b, fa, fm, fb, whole, 1e-15, 50)
    }

    fn pt(r: f64) -> ModulusPoint {
        ModulusPoint::new(r).unwrap()
    }

    fn par(a: f64) -> Param {
        Param::new(a).unwrap()
    }

    #[test]
    fn values_at_small_r() {
        let cfg = EvalConfig::default();
        for a in [0.1, 0.3, 0.5] {
            assert_relative_eq!(
                ellk_gen(par(a), pt(1e-9), &cfg).unwrap(),
                FRAC_PI_2,
                max_relative = 1e-15
            );
            assert_relative_eq!(
                elle_gen(par(a), pt(1e-9), &cfg).unwrap(),
                FRAC_PI_2,
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn legendre_case() {
        let cfg = EvalConfig::default();
        let k = ellk_gen(par(0.5), pt(0.6), &cfg).unwrap();
        assert_relative_eq!(k, 1.750_753_802_915_752_5, max_relative = 1e-14);
        assert_relative_eq!(k, agm_k(0.6), max_relative = 1e-14);
        let e = elle_gen(par(0.5), pt(0.6), &cfg).unwrap();
        assert_relative_eq!(e, legendre_e_quadrature(0.6), max_relative = 1e-12);
        assert_relative_eq!(e, 1.418_083_394_448_724, max_relative = 1e-14);
    }

    #[test]
    fn k_against_long_series() {
        // brute force: 1e5 terms, each coefficient rebuilt from scratch every 1000 steps
        let (a, x) = (0.3f64, 0.81f64);
        let mut sum = 0.0;
        let mut term = 1.0;
        for n in 0..100_000u32 {
            if n % 1000 == 0 {
                term = (0..n).fold(1.0, |t, k| {
                    let k = k as f64;
                    t * (a + k) * (1.0 - a + k) / ((k + 1.0) * (k + 1.0)) * x
                });
            }
            sum += term;
            let k = n as f64;
            term *= (a + k) * (1.0 - a + k) / ((k + 1.0) * (k + 1.0)) * x;
        }
        let k = ellk_gen(par(a), pt(0.9), &EvalConfig::default()).unwrap();
        assert_relative_eq!(k, FRAC_PI_2 * sum, max_relative = 1e-12);
    }

    #[test]
    fn agm_regression_across_regimes() {
        let cfg = EvalConfig::default();
        for r in [0.1, 0.5, 0.9, 0.97, 0.99, 0.999, 0.9999] {
            let k = ellk_gen(par(0.5), pt(r), &cfg).unwrap();
            assert_relative_eq!(k, agm_k(r), max_relative = 1e-12);
        }
    }

    #[test]
    fn e_at_one() {
        let cfg = EvalConfig::default();
        for a in [0.05, 0.2, 0.35, 0.5] {
            let p = ModulusPoint::from_rp2(1e-12).unwrap();
            let e = elle_gen(par(a), p, &cfg).unwrap();
            assert!((e - elle_gen_at_one(par(a))).abs() < 1e-8, "a = {a}");
        }
        assert_relative_eq!(elle_gen_at_one(par(0.5)), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn e_far_agrees_with_near_one_assembly() {
        // E through the plain series vs E = em + r'^2 K from the log expansion
        let cfg = EvalConfig::default();
        let wide = cfg.with_near_one_cut(0.2).unwrap();
        for a in [0.05, 0.25, 0.5] {
            for rp2 in [0.06, 0.1, 0.15] {
                let p = ModulusPoint::from_rp2(rp2).unwrap();
                let plain = e_value(par(a), &p, &cfg).unwrap();
                let near = e_value(par(a), &p, &wide).unwrap();
                assert_relative_eq!(plain, near, max_relative = 1e-13);
                let em_plain = em_scaled(par(a), &p, &cfg).unwrap();
                let em_near = em_scaled(par(a), &p, &wide).unwrap();
                assert_relative_eq!(em_plain, em_near, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn em_combo_series_vs_subtraction() {
        let cfg = EvalConfig::default();
        let p = pt(0.5);
        let direct = elle_gen(par(0.5), p, &cfg).unwrap() - 0.75 * ellk_gen(par(0.5), p, &cfg).unwrap();
        assert_relative_eq!(em_combo(par(0.5), p, &cfg).unwrap(), direct, max_relative = 1e-13);
        for a in [0.1, 0.3, 0.5] {
            let r = 1e-5;
            let e = em_combo(par(a), pt(r), &cfg).unwrap();
            assert_relative_eq!(e / (r * r), PI * a / 2.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn derivatives_small_r() {
        let cfg = EvalConfig::default();
        let r = 1e-6;
        for a in [0.1, 0.5] {
            let dk = d_ellk_gen(par(a), pt(r), &cfg).unwrap();
            assert_relative_eq!(dk, PI * a * (1.0 - a) * r, max_relative = 1e-9);
            let de = d_elle_gen(par(a), pt(r), &cfg).unwrap();
            assert!(de < 0.0 && de.abs() < 1e-5);
        }
    }

    #[test]
    fn derivative_finite_differences() {
        let cfg = EvalConfig::default();
        let h = 1e-5;
        let a = par(0.5);
        let r = 0.5;
        let fd = |f: &dyn Fn(ModulusPoint) -> f64| (f(pt(r + h)) - f(pt(r - h))) / (2.0 * h);
        let dk = fd(&|p| ellk_gen(a, p, &cfg).unwrap());
        assert_relative_eq!(d_ellk_gen(a, pt(r), &cfg).unwrap(), dk, max_relative = 1e-6);
        let de = fd(&|p| elle_gen(a, p, &cfg).unwrap());
        assert_relative_eq!(d_elle_gen(a, pt(r), &cfg).unwrap(), de, max_relative = 1e-6);
        let dem = fd(&|p| em_combo(a, p, &cfg).unwrap());
        let k = ellk_gen(a, pt(r), &cfg).unwrap();
        assert_relative_eq!(2.0 * 0.5 * r * k, dem, max_relative = 1e-6);
    }

    #[test]
    fn refuses_points_too_close_to_one() {
        let cfg = EvalConfig::default();
        let p = ModulusPoint::from_rp2(1e-15).unwrap();
        assert!(matches!(ellk_gen(par(0.3), p, &cfg), Err(Error::Domain { .. })));
        assert!(ModulusPoint::new(1.0).is_err());
        assert!(ModulusPoint::new(0.0).is_err());
        assert!(ModulusPoint::from_rp2(0.0).is_err());
    }

    #[test]
    fn excess_and_log_gap_consistency() {
        let cfg = EvalConfig::default();
        let a = par(0.3);
        for r in [0.2, 0.6, 0.9] {
            let p = pt(r);
            let k = k_value(a, &p, &cfg).unwrap();
            assert_relative_eq!(k_excess(a, &p, &cfg).unwrap(), k - FRAC_PI_2, max_relative = 1e-13);
        }
        let r0 = crate::ramanujan::r_def(crate::ramanujan::RArgument::new(0.3).unwrap());
        for rp2 in [0.01, 1e-6] {
            let p = ModulusPoint::from_rp2(rp2).unwrap();
            let half_log = 0.5 * (r0 + p.neg_log_rp2());
            let k = k_value(a, &p, &cfg).unwrap();
            let gap = k_log_gap(a, &p, half_log, &cfg).unwrap();
            assert!((gap - (k - a.sin_pi() * half_log)).abs() < 1e-13 * k);
        }
    }

    proptest! {
        #[test]
        fn k_increases_e_decreases(a in 0.01f64..=0.5, r in 0.001f64..0.998) {
            let cfg = EvalConfig::default();
            let (p0, p1) = (pt(r), pt(r + 0.001));
            let a = par(a);
            prop_assert!(ellk_gen(a, p1, &cfg).unwrap() > ellk_gen(a, p0, &cfg).unwrap());
            prop_assert!(elle_gen(a, p1, &cfg).unwrap() < elle_gen(a, p0, &cfg).unwrap());
            prop_assert!(d_ellk_gen(a, p0, &cfg).unwrap() > 0.0);
            prop_assert!(d_elle_gen(a, p0, &cfg).unwrap() < 0.0);
        }
    }
}
