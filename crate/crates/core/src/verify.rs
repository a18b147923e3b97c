//! Numerical verification catalogue.
//!
//! Each check evaluates one family of statements on a grid and reports
//! whether it held, together with the grid point where it came closest to
//! failing (or failed worst). [`run`] executes the whole catalogue.

use crate::bounds::{
    envelope_scan_with, f_lemma33, g_lambda, h_lambda, ratio_rho, sharp_constants, sharpness_scan, EnvelopeReport,
    SharpConstants, Side,
};
use crate::elliptic::{d_elle_gen, d_ellk_gen, elle_gen, elle_gen_at_one, ellk_gen, em_combo, ModulusPoint};
use crate::error::Result;
use crate::ramanujan::{
    cor24_gap, cor25_gap, eta, r_def, r_series, r_series_terms, rs_product, sine_gap, xi, RArgument,
};
use crate::special::{digamma, hyp2f1_k_near_one_comp, hyp2f1_series, pochhammer, zeta_int, EvalConfig, Param};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::time::Instant;

/// Grid density of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Grids ten times coarser than [`Level::Full`].
    Quick,
    Full,
}

impl Level {
    fn count(self, full: usize) -> usize {
        match self {
            Level::Full => full,
            Level::Quick => (full / 10).max(1),
        }
    }
}

/// Where a check came closest to failing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstPoint {
    pub at: String,
    /// Signed measure that must stay below the check's threshold.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Acceptance criterion exercised by this check, if any.
    pub criterion: Option<u8>,
    pub passed: bool,
    pub detail: String,
    pub worst: Option<WorstPoint>,
    pub seconds: f64,
}

/// Accumulates a pass/fail verdict and the worst point seen.
struct Tally {
    ok: bool,
    worst: Option<WorstPoint>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            ok: true,
            worst: None,
            notes: Vec::new(),
        }
    }

    /// Records `measure` at `at`; the statement holds when `measure <= limit`
    /// (or `< limit` when `strict`).
    fn measure(&mut self, at: impl FnOnce() -> String, measure: f64, limit: f64, strict: bool) {
        let held = if strict { measure < limit } else { measure <= limit };
        if !held {
            self.ok = false;
        }
        let gap = measure - limit;
        let worse = match &self.worst {
            None => true,
            Some(w) => gap > w.gap || gap.is_nan(),
        };
        if worse {
            self.worst = Some(WorstPoint { at: at(), gap });
        }
    }

    /// Strict positivity of `value`.
    fn positive(&mut self, at: impl FnOnce() -> String, value: f64) {
        self.measure(at, -value, 0.0, true);
    }

    fn require(&mut self, held: bool, note: impl Into<String>) {
        if !held {
            self.ok = false;
            self.notes.push(note.into());
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn fail_on(&mut self, err: crate::error::Error) {
        self.ok = false;
        self.notes.push(format!("error: {err}"));
    }

    fn finish(self, name: &'static str, criterion: Option<u8>, started: Instant) -> CheckOutcome {
        CheckOutcome {
            name,
            criterion,
            passed: self.ok,
            detail: self.notes.join("; "),
            worst: self.worst,
            seconds: started.elapsed().as_secs_f64(),
        }
    }
}

fn check(name: &'static str, criterion: Option<u8>, body: impl FnOnce(&mut Tally) -> Result<()>) -> CheckOutcome {
    let started = Instant::now();
    let mut t = Tally::new();
    if let Err(e) = body(&mut t) {
        t.fail_on(e);
    }
    t.finish(name, criterion, started)
}

/// Shortest round-trip decimal, in exponent form outside `[1e-4, 1e16)`.
struct Num(f64);

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let m = self.0.abs();
        if self.0 != 0.0 && m.is_finite() && !(1e-4..1e16).contains(&m) {
            write!(f, "{:e}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// `n` equally spaced points ending at `hi`: `lo + (hi - lo) i / n`, i = 1..n.
fn open_left(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect()
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    linspace(lo.ln(), hi.ln(), n).into_iter().map(f64::exp).collect()
}

/// `a = 0.5 k / n`, k = 1..n (for n = 20 this is `0.025 k`).
pub fn a_grid(n: usize) -> Vec<Param> {
    (1..=n)
        .map(|k| Param::new(0.5 * k as f64 / n as f64).expect("in (0, 1/2]"))
        .collect()
}

/// `n` moduli running from `r_lo` up to `r'^2 = rp2_lo`: the first half
/// log-spaced in `r` up to `1/sqrt 2`, the second log-spaced in `r'^2`
/// below `1/2`.
pub fn modulus_grid(r_lo: f64, rp2_lo: f64, n: usize) -> Vec<ModulusPoint> {
    let lower = n / 2;
    let upper = n - lower;
    let mut pts: Vec<ModulusPoint> = logspace(r_lo, 0.5f64.sqrt(), lower + 1)
        .into_iter()
        .take(lower)
        .map(|r| ModulusPoint::new(r).expect("r in (0, 1)"))
        .collect();
    pts.extend(
        logspace(0.5, rp2_lo, upper + 1)
            .into_iter()
            .skip(1)
            .map(|y| ModulusPoint::from_rp2(y).expect("r'^2 in (0, 1)")),
    );
    pts
}

fn arg(x: f64) -> RArgument {
    RArgument::new(x).expect("grid inside (0, 1/2]")
}

/// `pi / (2 AGM(1, r'))`, Legendre's `K` at `a = 1/2`.
fn agm_k(p: &ModulusPoint) -> f64 {
    let (mut x, mut y) = (1.0f64, p.rp2().sqrt());
    for _ in 0..64 {
        if (x - y).abs() <= 4.0 * f64::EPSILON * x {
            break;
        }
        let m = 0.5 * (x + y);
        y = (x * y).sqrt();
        x = m;
    }
    FRAC_PI_2 / x
}

fn central_diff(f: impl Fn(f64) -> Result<f64>, r: f64, h: f64) -> Result<f64> {
    Ok((f(r + h)? - f(r - h)?) / (2.0 * h))
}

fn strictly_monotone(t: &mut Tally, xs: &[f64], ys: &[f64], increasing: bool, what: &str) {
    for i in 1..ys.len() {
        let step = if increasing {
            ys[i] - ys[i - 1]
        } else {
            ys[i - 1] - ys[i]
        };
        t.positive(|| format!("{what} between {} and {}", Num(xs[i - 1]), Num(xs[i])), step);
    }
}

fn special_invariants(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("special functions", None, |t| {
        let n = level.count(1000);
        for x in [0.25, 0.5, 1.0, 3.7] {
            for k in 0..10u32 {
                let lhs = pochhammer(x, k + 1);
                let rhs = pochhammer(x, k) * (x + k as f64);
                t.measure(
                    || format!("pochhammer x={x} n={k}"),
                    rel(lhs, rhs),
                    4.0 * f64::EPSILON,
                    false,
                );
            }
        }
        for x in open_left(0.0, 0.5, n) {
            let r = -2.0 * crate::special::EULER_GAMMA - digamma(x)? - digamma(1.0 - x)?;
            t.positive(|| format!("R via digamma at x={x}"), r);
        }
        let xs = linspace(0.0, 0.99, n);
        let mut prev = None;
        for &x in &xs {
            let v = hyp2f1_series(0.3, 0.7, 1.0, x, cfg)?;
            if let Some(p) = prev {
                t.positive(|| format!("2F1(0.3,0.7;1;x) at x={x}"), v - p);
            }
            prev = Some(v);
        }
        let cut = cfg.near_one_cut();
        let wide = cfg.with_near_one_cut(2.0 * cut)?;
        for k in 1..=10 {
            let a = Param::new(0.05 * k as f64)?;
            for y in [cut, 1.5 * cut, 2.0 * cut] {
                let series = hyp2f1_series(a.get(), 1.0 - a.get(), 1.0, 1.0 - y, cfg)?;
                let near = hyp2f1_k_near_one_comp(a, y, &wide)?;
                t.measure(
                    || format!("2F1 routes a={} 1-x={y}", a.get()),
                    rel(near, series),
                    1e-12,
                    false,
                );
            }
        }
        Ok(())
    })
}

fn elliptic_invariants(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("elliptic integrals", None, |t| {
        let n = level.count(1000);
        let rs = linspace(1e-3, 0.999, n);
        for a in a_grid(level.count(20)) {
            let pts: Vec<_> = rs.iter().map(|&r| ModulusPoint::new(r)).collect::<Result<_>>()?;
            let ks = pts.iter().map(|&p| ellk_gen(a, p, cfg)).collect::<Result<Vec<_>>>()?;
            let es = pts.iter().map(|&p| elle_gen(a, p, cfg)).collect::<Result<Vec<_>>>()?;
            strictly_monotone(t, &rs, &ks, true, &format!("K_a a={}", a.get()));
            strictly_monotone(t, &rs, &es, false, &format!("E_a a={}", a.get()));
            for r in [0.3, 0.5, 0.7, 0.9] {
                let p = ModulusPoint::new(r)?;
                let direct = elle_gen(a, p, cfg)? - p.rp2() * ellk_gen(a, p, cfg)?;
                t.measure(
                    || format!("em_combo a={} r={r}", Num(a.get())),
                    rel(em_combo(a, p, cfg)?, direct),
                    1e-12,
                    false,
                );
            }
            let deep = ModulusPoint::from_rp2(1e-12)?;
            t.measure(
                || format!("E_a(1-) a={} r'^2=1e-12", a.get()),
                (elle_gen(a, deep, cfg)? - elle_gen_at_one(a)).abs(),
                1e-8,
                false,
            );
        }
        Ok(())
    })
}

fn ramanujan_dual_route(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("R dual route", Some(1), |t| {
        let target = 4.0 * LN_2;
        let half = arg(0.5);
        t.measure(|| "r_def(1/2)".into(), rel(r_def(half), target), 1e-13, false);
        t.measure(
            || "r_series(1/2)".into(),
            rel(r_series(half, cfg), target),
            1e-13,
            false,
        );
        for x in open_left(0.001, 0.5, level.count(1000)) {
            let d = r_def(arg(x));
            t.measure(|| format!("x={x}"), rel(r_series(arg(x), cfg), d), 1e-12, false);
            let extra = r_series_terms(arg(x), cfg, 5);
            let base = r_series(arg(x), cfg);
            t.require(
                (extra - base).abs() < cfg.rel_tol() * base || extra == base,
                format!("five extra terms moved R at x={x}"),
            );
        }
        Ok(())
    })
}

fn xi_check(level: Level) -> CheckOutcome {
    check("xi range and monotonicity", Some(2), |t| {
        let small = xi(arg(1e-4));
        t.require(small > 1.0 && small < 1.001, format!("xi(1e-4) = {small}"));
        let top = 4.0 - 4.0 * LN_2;
        t.measure(|| "xi(1/2)".into(), (xi(arg(0.5)) - top).abs(), 1e-12, false);
        let xs = open_left(0.0, 0.5, level.count(1000));
        let ys: Vec<f64> = xs.iter().map(|&x| xi(arg(x))).collect();
        strictly_monotone(t, &xs, &ys, true, "xi");
        for (&x, &y) in xs.iter().zip(&ys) {
            t.require(
                y > 1.0 && y <= top + 1e-12,
                format!("xi({x}) = {y} outside (1, 4-4log2]"),
            );
        }
        Ok(())
    })
}

fn eta_check(level: Level) -> CheckOutcome {
    check("eta range and monotonicity", Some(3), |t| {
        let top = PI * PI / 6.0;
        let bottom = 4.0 * PI - 16.0 * LN_2;
        t.measure(|| "eta(1e-4)".into(), (eta(arg(1e-4)) - top).abs(), 1e-3, false);
        t.measure(|| "eta(1/2)".into(), (eta(arg(0.5)) - bottom).abs(), 1e-12, false);
        let xs = open_left(0.0, 0.5, level.count(1000));
        let ys: Vec<f64> = xs.iter().map(|&x| eta(arg(x))).collect();
        strictly_monotone(t, &xs, &ys, false, "eta");
        for (&x, &y) in xs.iter().zip(&ys) {
            t.require(y >= bottom - 1e-12 && y < top, format!("eta({x}) = {y} out of range"));
        }
        let rs: Vec<f64> = xs.iter().map(|&x| rs_product(arg(x))).collect();
        strictly_monotone(t, &xs, &rs, false, "R sin(pi x)");
        for (&x, &y) in xs.iter().zip(&rs) {
            t.require(
                (4.0 * LN_2 - 1e-12..PI).contains(&y),
                format!("R sin(pi x) at {x} = {y} out of range"),
            );
        }
        Ok(())
    })
}

fn gap_check(level: Level) -> CheckOutcome {
    check("inequality gaps", Some(4), |t| {
        for x in open_left(0.0, 0.5, level.count(1000)) {
            t.positive(|| format!("cor24 gap x={x}"), cor24_gap(arg(x)));
            t.positive(|| format!("cor25 gap x={x}"), cor25_gap(arg(x)));
            t.positive(|| format!("sine gap x={x}"), sine_gap(x)?);
        }
        // 4 R (R - 1) times the first gap at x = 1/2, with R = 4 log 2
        let r = r_def(arg(0.5));
        let c24 = 4.0 * r * (r - 1.0) * cor24_gap(arg(0.5));
        let c215 = r - zeta_int(2)?;
        t.require(
            (c24 * 1000.0).floor() == 236.0,
            format!("(20log2-4)pi-64log^2 2 = {c24}"),
        );
        t.require((c215 * 1000.0).floor() == 1127.0, format!("log16-pi^2/6 = {c215}"));
        t.note(format!("constants {c24:.6} and {c215:.6}"));
        Ok(())
    })
}

fn legendre_check(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("a = 1/2 regression", Some(5), |t| {
        let a = Param::new(0.5)?;
        let c = sharp_constants(a);
        let four = (r_def(arg(0.5)) / 2.0).exp();
        t.measure(|| "exp(R(1/2)/2)".into(), rel(four, 4.0), 4.0 * f64::EPSILON, false);
        t.require(c.beta0 == 0.25, format!("beta0(1/2) = {}", c.beta0));
        t.measure(
            || "alpha0(1/2)".into(),
            rel(c.alpha0, PI / (4.0 * LN_2) - 1.0),
            1e-14,
            false,
        );
        for r in linspace(0.01, 0.9999, level.count(50)) {
            let p = ModulusPoint::new(r)?;
            let k = ellk_gen(a, p, cfg)?;
            t.measure(|| format!("K(r) r={r}"), rel(k, agm_k(&p)), 1e-12, false);
            let env = crate::bounds::envelope(a, p, cfg)?;
            let log4 = (4.0 / p.rp2().sqrt()).ln();
            let lower = (1.0 + (PI / (4.0 * LN_2) - 1.0) * p.rp2()) * log4;
            let upper = (1.0 + 0.25 * p.rp2()) * log4;
            t.measure(|| format!("lower form r={r}"), rel(env.lower, lower), 1e-13, false);
            t.measure(|| format!("upper form r={r}"), rel(env.upper, upper), 1e-13, false);
        }
        Ok(())
    })
}

fn derivative_check(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("derivative identities", Some(6), |t| {
        let h = 1e-5;
        let n = level.count(20);
        for a in a_grid(n) {
            let av = a.get();
            let k = |r: f64| ellk_gen(a, ModulusPoint::new(r)?, cfg);
            let e = |r: f64| elle_gen(a, ModulusPoint::new(r)?, cfg);
            let em = |r: f64| em_combo(a, ModulusPoint::new(r)?, cfg);
            let k_minus_e = |r: f64| Ok(k(r)? - e(r)?);
            for r in linspace(0.05, 0.95, n) {
                let p = ModulusPoint::new(r)?;
                let kv = ellk_gen(a, p, cfg)?;
                let ev = elle_gen(a, p, cfg)?;
                let at = |w: &str| format!("{w} a={} r={}", Num(av), Num(r));
                t.measure(
                    || at("dK/dr"),
                    rel(central_diff(k, r, h)?, d_ellk_gen(a, p, cfg)?),
                    1e-6,
                    false,
                );
                t.measure(
                    || at("dE/dr"),
                    rel(central_diff(e, r, h)?, d_elle_gen(a, p, cfg)?),
                    1e-6,
                    false,
                );
                t.measure(
                    || at("d(E-r'^2K)/dr"),
                    rel(central_diff(em, r, h)?, 2.0 * av * r * kv),
                    1e-6,
                    false,
                );
                let rhs = 2.0 * (1.0 - av) * r * ev / p.rp2();
                t.measure(
                    || at("d(K-E)/dr"),
                    rel(central_diff(k_minus_e, r, h)?, rhs),
                    1e-6,
                    false,
                );
            }
        }
        Ok(())
    })
}

/// Envelope over the default grids with the constants produced by `consts`.
///
/// Passing perturbed constants makes this a fault-injection probe: the
/// outcome fails and `worst` points at the offending corner of the grid.
pub fn envelope_check_with(
    level: Level,
    cfg: &EvalConfig,
    consts: impl Fn(Param) -> SharpConstants + Sync,
) -> CheckOutcome {
    check("envelope", Some(7), |t| {
        let a_pts = a_grid(level.count(20));
        let r_pts = modulus_grid(1e-6, 1e-10, level.count(200));
        let reps: Vec<EnvelopeReport> = envelope_scan_with(&a_pts, &r_pts, cfg, consts)?;
        for (i, rep) in reps.iter().enumerate() {
            let p = &r_pts[i % r_pts.len()];
            let at = || format!("a={} r={} r'^2={}", Num(rep.a), Num(rep.r), Num(p.rp2()));
            t.positive(at, rep.lower_margin.min(rep.upper_margin));
        }
        for &a in &a_pts {
            let c = sharp_constants(a);
            let lo = ratio_rho(a, ModulusPoint::new(1e-6)?, cfg)?;
            t.measure(
                || format!("rho(r=1e-6) a={}", a.get()),
                (lo - (1.0 + c.alpha0)).abs(),
                1e-6,
                false,
            );
            let hi = ratio_rho(a, ModulusPoint::from_rp2(1e-10)?, cfg)?;
            t.measure(
                || format!("rho(r'^2=1e-10) a={}", a.get()),
                (hi - 1.0).abs(),
                1e-4,
                false,
            );
        }
        Ok(())
    })
}

fn sharpness_check(cfg: &EvalConfig) -> CheckOutcome {
    check("sharpness witnesses", Some(8), |t| {
        for k in 1..=5 {
            let a = Param::new(0.1 * k as f64)?;
            let c = sharp_constants(a);
            for (side, lambda) in [(Side::Lower, c.alpha0 + 0.01), (Side::Upper, c.beta0 - 0.01)] {
                match sharpness_scan(a, lambda, side, cfg) {
                    Ok(w) => t.positive(
                        || format!("{} a={} r={} r'^2={}", side.as_str(), Num(w.a), Num(w.r), Num(w.rp2)),
                        w.gap,
                    ),
                    Err(e) => t.require(false, e.to_string()),
                }
            }
        }
        Ok(())
    })
}

fn f_monotone_check(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("F monotonicity and range", Some(9), |t| {
        let pts = modulus_grid(1e-3, 1e-8, level.count(1000));
        let xs: Vec<f64> = pts.iter().map(|p| p.r()).collect();
        for a in a_grid(level.count(20)) {
            let av = a.get();
            let s = a.sin_pi();
            let fs = pts.iter().map(|&p| f_lemma33(a, p, cfg)).collect::<Result<Vec<_>>>()?;
            strictly_monotone(t, &xs, &fs, true, &format!("F a={av}"));
            let lo = s - PI * av * (1.0 - av) - FRAC_PI_2 * (av * (1.0 - av)).powi(2);
            let hi = av * (1.0 - av) * s;
            let f0 = f_lemma33(a, ModulusPoint::new(1e-3)?, cfg)?;
            let f1 = f_lemma33(a, ModulusPoint::from_rp2(1e-8)?, cfg)?;
            t.measure(|| format!("F(1e-3) a={av}"), (f0 - lo).abs(), 1e-6, false);
            t.measure(|| format!("F(r'^2=1e-8) a={av}"), (f1 - hi).abs(), 1e-6, false);
        }
        Ok(())
    })
}

/// Relative error of `H'` against `2 lambda r sin(pi a) G`, measured on the
/// scale of `2 lambda r sin(pi a)` wherever `|G| < 1`.
pub fn h_identity_error(a: Param, lambda: f64, r: f64, cfg: &EvalConfig) -> Result<f64> {
    let h = |r: f64| h_lambda(a, lambda, ModulusPoint::new(r)?, cfg);
    let fd = central_diff(h, r, 1e-5)?;
    let scale = 2.0 * lambda * r * a.sin_pi();
    let g = g_lambda(a, lambda, ModulusPoint::new(r)?, cfg)?;
    Ok((fd - scale * g).abs() / (scale * g.abs().max(1.0)))
}

fn g_limits_check(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("G limit table and identity", Some(10), |t| {
        let tiny = ModulusPoint::new(1e-6)?;
        let deep = ModulusPoint::from_rp2(1e-8)?;
        for a in a_grid(level.count(20)) {
            let av = a.get();
            let c = sharp_constants(a);
            let below = g_lambda(a, c.lambda1 - 1e-6, tiny, cfg)?;
            let above = g_lambda(a, c.lambda1 + 1e-6, tiny, cfg)?;
            t.positive(|| format!("G(0+) at lambda1-1e-6 a={av}"), below);
            t.positive(|| format!("-G(0+) at lambda1+1e-6 a={av}"), -above);
            let g1 = g_lambda(a, c.beta0, deep, cfg)?;
            let target = 1.0 - 1.0 / (2.0 * c.beta0);
            t.measure(|| format!("G_beta0(1-) a={av}"), (g1 - target).abs(), 1e-4, false);
        }
        let n = level.count(10);
        for a in a_grid(n) {
            let c = sharp_constants(a);
            for r in linspace(0.05, 0.95, n) {
                for lambda in [c.lambda1, c.alpha0, c.beta0] {
                    let err = h_identity_error(a, lambda, r, cfg)?;
                    t.measure(
                        || format!("H' identity a={} lambda={} r={}", Num(a.get()), Num(lambda), Num(r)),
                        err,
                        1e-6,
                        false,
                    );
                }
            }
        }
        Ok(())
    })
}

/// Sign changes in the consecutive differences of `ys`.
fn turns(ys: &[f64]) -> (usize, Option<bool>) {
    let mut changes = 0;
    let mut first = None;
    let mut last: Option<bool> = None;
    for w in ys.windows(2) {
        let up = w[1] > w[0];
        if first.is_none() {
            first = Some(up);
        }
        if let Some(prev) = last {
            if prev != up {
                changes += 1;
            }
        }
        last = Some(up);
    }
    (changes, first)
}

fn g_shape_check(level: Level, cfg: &EvalConfig) -> CheckOutcome {
    check("G monotonicity pattern", None, |t| {
        let pts = modulus_grid(1e-2, 1e-8, level.count(1000));
        for a in a_grid(level.count(20)) {
            let av = a.get();
            let c = sharp_constants(a);
            let series = |lambda: f64| {
                pts.iter()
                    .map(|&p| g_lambda(a, lambda, p, cfg))
                    .collect::<Result<Vec<_>>>()
            };
            let (n_inc, first_inc) = turns(&series(c.lambda2)?);
            t.require(
                n_inc == 0 && first_inc == Some(true),
                format!("G_lambda2 not increasing at a={av}"),
            );
            let (n_dec, first_dec) = turns(&series(c.beta0)?);
            t.require(
                n_dec == 0 && first_dec == Some(false),
                format!("G_beta0 not decreasing at a={av}"),
            );
            let (n_mid, first_mid) = turns(&series(0.5 * (c.lambda2 + c.beta0))?);
            t.require(
                n_mid == 1 && first_mid == Some(false),
                format!("G between lambda2 and beta0 at a={av}: {n_mid} turns"),
            );
        }
        Ok(())
    })
}

fn constants_check() -> CheckOutcome {
    check("constant ordering", None, |t| {
        for k in 1..=50 {
            let a = Param::new(0.01 * k as f64)?;
            let c = sharp_constants(a);
            let at = || format!("a={}", a.get());
            t.positive(at, c.alpha0 - c.lambda1);
            t.positive(at, c.beta0 - c.alpha0);
            t.positive(at, c.lambda1);
            t.positive(at, c.lambda2);
            t.require(c.beta0 <= 0.25, format!("beta0 > 1/4 at a={}", a.get()));
        }
        Ok(())
    })
}

/// Runs the whole catalogue. Every check runs even if an earlier one fails.
pub fn run(level: Level, cfg: &EvalConfig) -> Vec<CheckOutcome> {
    vec![
        special_invariants(level, cfg),
        elliptic_invariants(level, cfg),
        ramanujan_dual_route(level, cfg),
        xi_check(level),
        eta_check(level),
        gap_check(level),
        legendre_check(level, cfg),
        derivative_check(level, cfg),
        envelope_check_with(level, cfg, sharp_constants),
        sharpness_check(cfg),
        f_monotone_check(level, cfg),
        g_limits_check(level, cfg),
        g_shape_check(level, cfg),
        constants_check(),
    ]
}

/// The check exercising acceptance criterion `n` (1..=10) at `level`.
pub fn run_criterion(n: u8, level: Level, cfg: &EvalConfig) -> Option<CheckOutcome> {
    Some(match n {
        1 => ramanujan_dual_route(level, cfg),
        2 => xi_check(level),
        3 => eta_check(level),
        4 => gap_check(level),
        5 => legendre_check(level, cfg),
        6 => derivative_check(level, cfg),
        7 => envelope_check_with(level, cfg, sharp_constants),
        8 => sharpness_check(cfg),
        9 => f_monotone_check(level, cfg),
        10 => g_limits_check(level, cfg),
        _ => return None,
    })
}
