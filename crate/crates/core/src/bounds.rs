//! Sharp two-sided logarithmic bounds for `K_a`:
//!
//! ```text
//! 1 + alpha0 r'^2 < K_a(r) / (sin(pi a) log(e^{R(a)/2} / r')) < 1 + beta0 r'^2
//! ```
//!
//! with `alpha0 = pi/(R(a) sin(pi a)) - 1` and `beta0 = a(1-a)`, the auxiliary
//! functions `F`, `G_lambda`, `H_lambda` that control the ratio, and scanners
//! that certify the envelope on grids and exhibit violations for perturbed
//! constants.
//!
//! Both margins of the envelope vanish at an endpoint (the lower one as
//! `r -> 0`, the upper one as `r -> 1`), so they are never formed by
//! subtracting two nearly equal values. `H_lambda` is expanded about
//! whichever endpoint is closer and every retained term is small on its own.

use crate::elliptic::{self, em_scaled, k_excess, k_log_gap, k_value, ModulusPoint};
use crate::error::{Error, Result};
use crate::ramanujan::{pi_minus_rs, r_def, sin_minus_quadratic, sine_gap, RArgument};
use crate::special::{sum_terms, EvalConfig, Param};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

/// The constants of the envelope and the two thresholds that govern the
/// shape of `G_lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpConstants {
    /// Best lower coefficient, `pi/(R(a) sin(pi a)) - 1`.
    pub alpha0: f64,
    /// Best upper coefficient, `a(1-a)`.
    pub beta0: f64,
    /// `G_lambda(0+)` changes sign at this `lambda`.
    pub lambda1: f64,
    /// `G_lambda` is increasing for `lambda <= lambda2`.
    pub lambda2: f64,
}

/// Signed position of a violated inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// One grid point of the envelope.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeReport {
    pub a: f64,
    pub r: f64,
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    /// `value - lower`, evaluated as `-H_{alpha0}(r)`.
    pub lower_margin: f64,
    /// `upper - value`, evaluated as `H_{beta0}(r)`.
    pub upper_margin: f64,
}

/// A point where `1 + lambda r'^2` fails as a bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ViolationWitness {
    pub a: f64,
    pub lambda: f64,
    pub side: Side,
    pub r: f64,
    /// `r'^2`; `r` alone rounds to 1 for the deepest upper-side points.
    pub rp2: f64,
    /// How far the ratio lies on the wrong side of `1 + lambda r'^2`; positive.
    pub gap: f64,
}

/// Per-`a` quantities shared by every point evaluation.
#[derive(Debug, Clone, Copy)]
struct Frame {
    a: Param,
    s: f64,
    ramanujan: f64,
    consts: SharpConstants,
}

impl Frame {
    fn new(a: Param) -> Self {
        let x = RArgument::from(a);
        let av = a.get();
        let s = a.sin_pi();
        let ramanujan = r_def(x);
        let consts = SharpConstants {
            alpha0: pi_minus_rs(av) / (ramanujan * s),
            beta0: av * (1.0 - av),
            lambda1: sin_minus_quadratic(av) / (s * (ramanujan - 1.0)),
            lambda2: sine_gap(av).expect("a in (0, 1/2]") / s,
        };
        Frame {
            a,
            s,
            ramanujan,
            consts,
        }
    }

    /// `log(e^{R(a)/2} / r') = R(a)/2 - log(r'^2)/2`.
    fn half_log(&self, p: &ModulusPoint) -> f64 {
        0.5 * (self.ramanujan + p.neg_log_rp2())
    }

    fn h(&self, lambda: f64, p: &ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
        let s = self.s;
        let half_log = self.half_log(p);
        if p.near_one(cfg) {
            // H = s lambda r'^2 Lambda - (K - s Lambda)
            let gap = k_log_gap(self.a, p, half_log, cfg)?;
            Ok(s * lambda * p.rp2() * half_log - gap)
        } else {
            // H = s R (lambda - alpha0)/2 + (s/2)[(1+lambda) l - lambda x (R + l)] - (K - pi/2)
            let x = p.r2();
            let l = p.neg_log_rp2();
            let head = 0.5 * s * self.ramanujan * (lambda - self.consts.alpha0);
            let body = 0.5 * s * ((1.0 + lambda) * l - lambda * x * (self.ramanujan + l));
            Ok(head + body - k_excess(self.a, p, cfg)?)
        }
    }

    fn g(&self, lambda: f64, p: &ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
        let base = 0.5 - self.half_log(p);
        if p.near_one(cfg) {
            // (s - 2(1-a) em/r^2) / (r'^2 s) = -sum_{n>=1} c_n y^{n-1}[1 - n(d_n - L)]
            let tail = elliptic::near_one_series(self.a, p, cfg)?.em_sum(true)?;
            Ok(base - tail / (2.0 * lambda))
        } else {
            let e = em_scaled(self.a, p, cfg)?;
            let av = self.a.get();
            Ok(base + (self.s - 2.0 * (1.0 - av) * e) / (2.0 * lambda * p.rp2() * self.s))
        }
    }

    fn envelope(&self, consts: &SharpConstants, p: &ModulusPoint, cfg: &EvalConfig) -> Result<EnvelopeReport> {
        let half_log = self.half_log(p);
        let value = k_value(self.a, p, cfg)?;
        let y = p.rp2();
        Ok(EnvelopeReport {
            a: self.a.get(),
            r: p.r(),
            lower: self.s * (1.0 + consts.alpha0 * y) * half_log,
            value,
            upper: self.s * (1.0 + consts.beta0 * y) * half_log,
            lower_margin: -self.h(consts.alpha0, p, cfg)?,
            upper_margin: self.h(consts.beta0, p, cfg)?,
        })
    }
}

fn positive_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("lambda", lambda, "(0, inf)"))
    }
}

pub fn sharp_constants(a: Param) -> SharpConstants {
    Frame::new(a).consts
}

/// `K_a(r) / (sin(pi a) log(e^{R(a)/2} / r'))`.
pub fn ratio_rho(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    let frame = Frame::new(a);
    Ok(k_value(a, &p, cfg)? / (frame.s * frame.half_log(&p)))
}

/// Envelope at one point with the sharp constants.
pub fn envelope(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<EnvelopeReport> {
    let frame = Frame::new(a);
    frame.envelope(&frame.consts, &p, cfg)
}

/// Envelope with caller-supplied constants; margins go negative where they fail.
pub fn envelope_with(a: Param, consts: &SharpConstants, p: ModulusPoint, cfg: &EvalConfig) -> Result<EnvelopeReport> {
    Frame::new(a).envelope(consts, &p, cfg)
}

/// `H_lambda(r) = sin(pi a)(1 + lambda r'^2) log(e^{R(a)/2}/r') - K_a(r)`.
pub fn h_lambda(a: Param, lambda: f64, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    positive_lambda(lambda)?;
    Frame::new(a).h(lambda, &p, cfg)
}

/// ```text
/// G_lambda(r) = 1/2 - log(e^{R(a)/2}/r')
///             + (r^2 sin(pi a) - 2(1-a)(E_a - r'^2 K_a)) / (2 lambda r^2 r'^2 sin(pi a))
/// ```
///
/// so that `H_lambda'(r) = 2 lambda r sin(pi a) G_lambda(r)`.
pub fn g_lambda(a: Param, lambda: f64, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    positive_lambda(lambda)?;
    Frame::new(a).g(lambda, &p, cfg)
}

/// ```text
/// F(r) = (r^4 sin(pi a) - 2a(1-a) r^2 r'^2 K_a + 2(1-a)(r'^2 - r^2)(E_a - r'^2 K_a)) / (r'^2 r^4)
/// ```
///
/// increasing from `sin(pi a) - pi a(1-a) - (pi/2) a^2 (1-a)^2` to
/// `a(1-a) sin(pi a)`.
pub fn f_lemma33(a: Param, p: ModulusPoint, cfg: &EvalConfig) -> Result<f64> {
    let s = a.sin_pi();
    let av = a.get();
    if p.near_one(cfg) {
        let sum = elliptic::near_one_series(a, &p, cfg)?.f_sum()?;
        return Ok(s * sum / p.r2());
    }
    // numerator / r^4 = s + pi a(1-a) sum_j t_j x^j with
    // t_j = k_j (j-1)/(j+1) - k_{j+1} (j+1)/(j+2), k_j = (a)_j (1-a)_j / (j!)^2
    let x = p.r2();
    let ab = av * (1.0 - av);
    let mut k = 1.0;
    let mut xpow = 1.0;
    let mut j = 0.0;
    let mut next_t = || {
        let k1 = k * (av + j) * (1.0 - av + j) / ((j + 1.0) * (j + 1.0));
        let t = (k * (j - 1.0) / (j + 1.0) - k1 * (j + 1.0) / (j + 2.0)) * xpow;
        k = k1;
        xpow *= x;
        j += 1.0;
        t
    };
    let sum = sum_terms("F series", cfg, |_| next_t())?;
    Ok((s + PI * ab * sum) / p.rp2())
}

/// Envelope at every `(a, r)` pair, ordered by `a` then `r`.
pub fn envelope_scan(a_grid: &[Param], r_grid: &[ModulusPoint], cfg: &EvalConfig) -> Result<Vec<EnvelopeReport>> {
    envelope_scan_with(a_grid, r_grid, cfg, sharp_constants)
}

/// As [`envelope_scan`], with the constants for each `a` produced by `consts`.
pub fn envelope_scan_with(
    a_grid: &[Param],
    r_grid: &[ModulusPoint],
    cfg: &EvalConfig,
    consts: impl Fn(Param) -> SharpConstants + Sync,
) -> Result<Vec<EnvelopeReport>> {
    if a_grid.is_empty() {
        return Err(Error::EmptyGrid("a grid"));
    }
    if r_grid.is_empty() {
        return Err(Error::EmptyGrid("r grid"));
    }
    let frames: Vec<(Frame, SharpConstants)> = a_grid.iter().map(|&a| (Frame::new(a), consts(a))).collect();
    (0..frames.len() * r_grid.len())
        .into_par_iter()
        .map(|idx| {
            let (frame, c) = &frames[idx / r_grid.len()];
            let p = &r_grid[idx % r_grid.len()];
            frame.envelope(c, p, cfg).map_err(|e| Error::AtPoint {
                a: frame.a.get(),
                r: p.r(),
                rp2: p.rp2(),
                source: Box::new(e),
            })
        })
        .collect()
}

/// Number of geometric refinements in a sharpness search.
pub const SHARPNESS_STEPS: usize = 40;

/// Exponent step of the upper-side search: `r'^2 = 2^{-24 k}`.
const UPPER_STEP_BITS: i32 = 24;

/// Grid searched for a violation on `side`: `r = 2^{-k}` towards 0 for the
/// lower side, `r'^2 = 2^{-24k}` towards 1 for the upper side, k = 1..40.
pub fn sharpness_grid(side: Side) -> Vec<ModulusPoint> {
    (1..=SHARPNESS_STEPS as i32)
        .map(|k| match side {
            Side::Lower => ModulusPoint::new(2f64.powi(-k)),
            Side::Upper => ModulusPoint::from_rp2(2f64.powi(-UPPER_STEP_BITS * k)),
        })
        .collect::<Result<_>>()
        .expect("grid points lie in (0, 1)")
}

/// First grid point where `1 + lambda r'^2` stops bounding the ratio.
///
/// The lower side needs `lambda > alpha0`, the upper side `0 < lambda < beta0`.
pub fn sharpness_scan(a: Param, lambda: f64, side: Side, cfg: &EvalConfig) -> Result<ViolationWitness> {
    let frame = Frame::new(a);
    let c = frame.consts;
    match side {
        Side::Lower if lambda <= c.alpha0 || lambda.is_nan() => {
            return Err(Error::domain(
                "lambda",
                lambda,
                format!("({}, inf) for the lower side", c.alpha0),
            ))
        }
        Side::Upper if !(lambda > 0.0 && lambda < c.beta0) => {
            return Err(Error::domain(
                "lambda",
                lambda,
                format!("(0, {}) for the upper side", c.beta0),
            ))
        }
        _ => {}
    }
    for p in sharpness_grid(side) {
        let h = frame.h(lambda, &p, cfg)?;
        // H / (s Lambda) = (1 + lambda r'^2) - rho
        let scaled = h / (frame.s * frame.half_log(&p));
        let gap = match side {
            Side::Lower => scaled,
            Side::Upper => -scaled,
        };
        if gap > 0.0 {
            return Ok(ViolationWitness {
                a: a.get(),
                lambda,
                side,
                r: p.r(),
                rp2: p.rp2(),
                gap,
            });
        }
    }
    Err(Error::WitnessNotFound {
        a: a.get(),
        lambda,
        side: side.as_str(),
        steps: SHARPNESS_STEPS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{elle_gen, ellk_gen};
    use approx::assert_relative_eq;
    use std::f64::consts::LN_2;

    fn par(a: f64) -> Param {
        Param::new(a).unwrap()
    }

    fn pt(r: f64) -> ModulusPoint {
        ModulusPoint::new(r).unwrap()
    }

    /// F assembled from K and E by plain subtraction; fine at moderate r.
    fn f_direct(a: f64, r: f64) -> f64 {
        let cfg = EvalConfig::default();
        let k = ellk_gen(par(a), pt(r), &cfg).unwrap();
        let e = elle_gen(par(a), pt(r), &cfg).unwrap();
        let (x, y) = (r * r, 1.0 - r * r);
        let s = (PI * a).sin();
        let em = e - y * k;
        (x * x * s - 2.0 * a * (1.0 - a) * x * y * k + 2.0 * (1.0 - a) * (y - x) * em) / (y * x * x)
    }

    /// G assembled by plain subtraction.
    fn g_direct(a: f64, lambda: f64, r: f64) -> f64 {
        let cfg = EvalConfig::default();
        let k = ellk_gen(par(a), pt(r), &cfg).unwrap();
        let e = elle_gen(par(a), pt(r), &cfg).unwrap();
        let (x, y) = (r * r, 1.0 - r * r);
        let s = (PI * a).sin();
        let rr = r_def(RArgument::new(a).unwrap());
        0.5 - (rr / 2.0 - 0.5 * y.ln()) + (x * s - 2.0 * (1.0 - a) * (e - y * k)) / (2.0 * lambda * x * y * s)
    }

    fn h_direct(a: f64, lambda: f64, r: f64) -> f64 {
        let cfg = EvalConfig::default();
        let k = ellk_gen(par(a), pt(r), &cfg).unwrap();
        let y = 1.0 - r * r;
        let rr = r_def(RArgument::new(a).unwrap());
        (PI * a).sin() * (1.0 + lambda * y) * (rr / 2.0 - 0.5 * y.ln()) - k
    }

    #[test]
    fn constants_at_half() {
        let c = sharp_constants(par(0.5));
        assert_relative_eq!(c.alpha0, PI / (4.0 * LN_2) - 1.0, max_relative = 1e-13);
        assert_relative_eq!(c.alpha0, 0.133_090_035_456_798_45, max_relative = 1e-13);
        assert_eq!(c.beta0, 0.25);
        assert_relative_eq!(sharp_constants(par(0.3)).beta0, 0.21, max_relative = 1e-15);
    }

    #[test]
    fn constants_ordering() {
        for k in 1..=50 {
            let c = sharp_constants(par(0.01 * k as f64));
            assert!(0.0 < c.lambda1 && c.lambda1 < c.alpha0 && c.alpha0 < c.beta0 && c.beta0 <= 0.25);
            assert!(c.lambda2 > 0.0);
        }
    }

    #[test]
    fn rho_limits() {
        let cfg = EvalConfig::default();
        for a in [0.1, 0.3, 0.5] {
            let c = sharp_constants(par(a));
            let lo = ratio_rho(par(a), pt(1e-6), &cfg).unwrap();
            assert!((lo - (1.0 + c.alpha0)).abs() < 1e-6);
            let hi = ratio_rho(par(a), ModulusPoint::from_rp2(1e-10).unwrap(), &cfg).unwrap();
            assert!((hi - 1.0).abs() < 1e-4);
        }
        let k = ellk_gen(par(0.5), pt(0.8), &cfg).unwrap();
        assert_relative_eq!(
            ratio_rho(par(0.5), pt(0.8), &cfg).unwrap(),
            k / (4.0f64 / 0.6).ln(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn envelope_point() {
        let cfg = EvalConfig::default();
        let rep = envelope(par(0.5), pt(0.5), &cfg).unwrap();
        assert_relative_eq!(rep.value, 1.685_750_354_812_596, max_relative = 1e-14);
        assert!(rep.lower < rep.value && rep.value < rep.upper);
        assert_relative_eq!(rep.lower_margin, rep.value - rep.lower, max_relative = 1e-12);
        assert_relative_eq!(rep.upper_margin, rep.upper - rep.value, max_relative = 1e-12);
        let tiny = envelope(par(0.5), pt(1e-6), &cfg).unwrap();
        assert!(tiny.lower_margin > 0.0 && tiny.lower_margin < 1e-12);
        let deep = envelope(par(0.5), ModulusPoint::from_rp2(1e-10).unwrap(), &cfg).unwrap();
        assert!(deep.upper_margin > 0.0 && deep.upper_margin < 1e-9);
    }

    #[test]
    fn h_matches_direct_form() {
        let cfg = EvalConfig::default();
        for a in [0.1, 0.3, 0.5] {
            for lambda in [0.05, 0.2] {
                for r in [0.3, 0.7, 0.95, 0.99] {
                    let h = h_lambda(par(a), lambda, pt(r), &cfg).unwrap();
                    assert!((h - h_direct(a, lambda, r)).abs() < 1e-13, "a={a} l={lambda} r={r}");
                }
            }
        }
    }

    #[test]
    fn h_endpoint_values() {
        let cfg = EvalConfig::default();
        for a in [0.1, 0.3, 0.5] {
            let c = sharp_constants(par(a));
            assert!(h_lambda(par(a), c.alpha0, pt(1e-7), &cfg).unwrap().abs() < 1e-12);
            // H(0+) = (sin(pi a)(1+lambda)R(a) - pi)/2
            let lambda = 0.3;
            let rr = r_def(RArgument::new(a).unwrap());
            let at0 = ((PI * a).sin() * (1.0 + lambda) * rr - PI) / 2.0;
            assert!((h_lambda(par(a), lambda, pt(1e-7), &cfg).unwrap() - at0).abs() < 1e-10);
            for lambda in [0.01, 0.2, 1.0] {
                let p = ModulusPoint::from_rp2(1e-12).unwrap();
                assert!(h_lambda(par(a), lambda, p, &cfg).unwrap().abs() < 1e-9);
            }
        }
    }

    #[test]
    fn f_matches_direct_and_range() {
        let cfg = EvalConfig::default();
        for a in [0.1, 0.3, 0.5] {
            for r in [0.3, 0.5, 0.8] {
                let f = f_lemma33(par(a), pt(r), &cfg).unwrap();
                assert!((f - f_direct(a, r)).abs() < 1e-11, "a={a} r={r}");
            }
        }
        let a = 0.3;
        let s = (PI * a).sin();
        let lo = s - PI * a * (1.0 - a) - PI / 2.0 * (a * (1.0 - a)).powi(2);
        let hi = a * (1.0 - a) * s;
        let mid = f_lemma33(par(a), pt(0.5), &cfg).unwrap();
        assert!(lo < mid && mid < hi);
        assert!((f_lemma33(par(a), pt(1e-3), &cfg).unwrap() - lo).abs() < 1e-6);
        let top = f_lemma33(par(a), ModulusPoint::from_rp2(1e-8).unwrap(), &cfg).unwrap();
        assert!((top - hi).abs() < 1e-6);
    }

    #[test]
    fn f_routes_agree_at_cut() {
        let cfg = EvalConfig::default();
        let wide = cfg.with_near_one_cut(0.2).unwrap();
        for a in [0.05, 0.3, 0.5] {
            for rp2 in [0.06, 0.1, 0.19] {
                let p = ModulusPoint::from_rp2(rp2).unwrap();
                let plain = f_lemma33(par(a), p, &cfg).unwrap();
                let near = f_lemma33(par(a), p, &wide).unwrap();
                assert!((plain - near).abs() < 1e-12, "a={a} rp2={rp2}: {plain} {near}");
                let g_plain = g_lambda(par(a), 0.1, p, &cfg).unwrap();
                let g_near = g_lambda(par(a), 0.1, p, &wide).unwrap();
                assert!((g_plain - g_near).abs() < 1e-12);
                let h_plain = h_lambda(par(a), 0.1, p, &cfg).unwrap();
                let h_near = h_lambda(par(a), 0.1, p, &wide).unwrap();
                assert!((h_plain - h_near).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn g_matches_direct_and_limits() {
        let cfg = EvalConfig::default();
        for a in [0.1, 0.3, 0.5] {
            for r in [0.3, 0.6, 0.9] {
                let g = g_lambda(par(a), 0.15, pt(r), &cfg).unwrap();
                assert!((g - g_direct(a, 0.15, r)).abs() < 1e-11);
            }
            let c = sharp_constants(par(a));
            assert!(g_lambda(par(a), c.lambda1, pt(1e-6), &cfg).unwrap().abs() < 1e-9);
            assert!(g_lambda(par(a), c.lambda1 * 1.5, pt(1e-6), &cfg).unwrap() < 0.0);
            let p = ModulusPoint::from_rp2(1e-8).unwrap();
            let g1 = g_lambda(par(a), c.beta0, p, &cfg).unwrap();
            assert!((g1 - (1.0 - 1.0 / (2.0 * c.beta0))).abs() < 1e-4);
        }
        assert!(g_lambda(par(0.3), 0.0, pt(0.5), &cfg).is_err());
    }

    #[test]
    fn sharpness_examples() {
        let cfg = EvalConfig::default();
        let a = par(0.3);
        let c = sharp_constants(a);
        let lo = sharpness_scan(a, c.alpha0 + 0.01, Side::Lower, &cfg).unwrap();
        assert!(lo.gap > 0.0 && lo.r <= 0.5);
        let up = sharpness_scan(a, c.beta0 - 0.01, Side::Upper, &cfg).unwrap();
        assert!(up.gap > 0.0 && up.rp2 < 1e-6);
        let half = par(0.5);
        assert!(sharpness_scan(half, 0.2, Side::Lower, &cfg).is_ok());
        assert!(sharpness_scan(half, 0.2, Side::Upper, &cfg).is_ok());
        assert!(sharpness_scan(a, c.alpha0, Side::Lower, &cfg).is_err());
        assert!(sharpness_scan(a, c.beta0, Side::Upper, &cfg).is_err());
    }

    #[test]
    fn sharp_constants_admit_no_witness() {
        let cfg = EvalConfig::default();
        for a in [0.1, 0.5] {
            let c = sharp_constants(par(a));
            let frame = Frame::new(par(a));
            for p in sharpness_grid(Side::Lower) {
                assert!(frame.h(c.alpha0, &p, &cfg).unwrap() <= 0.0);
            }
            for p in sharpness_grid(Side::Upper) {
                assert!(frame.h(c.beta0, &p, &cfg).unwrap() >= 0.0);
            }
        }
    }

    #[test]
    fn scan_shapes() {
        let cfg = EvalConfig::default();
        let a_grid = [par(0.5)];
        let r_grid = [pt(0.5)];
        let reps = envelope_scan(&a_grid, &r_grid, &cfg).unwrap();
        assert_eq!(reps, vec![envelope(par(0.5), pt(0.5), &cfg).unwrap()]);
        assert!(matches!(envelope_scan(&a_grid, &[], &cfg), Err(Error::EmptyGrid(_))));
        let many: Vec<_> = (1..=7).map(|k| pt(k as f64 / 8.0)).collect();
        let reps = envelope_scan(&[par(0.2), par(0.4)], &many, &cfg).unwrap();
        assert_eq!(reps.len(), 14);
        assert_eq!(reps[8].a, 0.4);
        assert_eq!(reps[8].r, many[1].r());
    }
}
