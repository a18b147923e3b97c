//! Scalar special functions: rising factorials, the Gauss hypergeometric
//! series, digamma, and the Riemann zeta function at integer arguments.
//!
//! Everything here works in plain `f64`. Long sums go through
//! [`CompensatedSum`] so that rounding does not drift with the term count.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Tolerances and caps shared by every series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    rel_tol: f64,
    max_terms: usize,
    near_one_cut: f64,
}

impl EvalConfig {
    pub const DEFAULT_REL_TOL: f64 = 1e-15;
    pub const DEFAULT_MAX_TERMS: usize = 20_000;
    pub const DEFAULT_NEAR_ONE_CUT: f64 = 0.05;

    pub fn new(rel_tol: f64, max_terms: usize, near_one_cut: f64) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1e-6) {
            return Err(Error::domain("rel_tol", rel_tol, "(0, 1e-6)"));
        }
        if max_terms < 64 {
            return Err(Error::domain("max_terms", max_terms as f64, "[64, inf)"));
        }
        if !(near_one_cut > 0.0 && near_one_cut < 1.0) {
            return Err(Error::domain("near_one_cut", near_one_cut, "(0, 1)"));
        }
        Ok(EvalConfig {
            rel_tol,
            max_terms,
            near_one_cut,
        })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Threshold on r'^2 below which `K_a` switches to the logarithmic expansion.
    pub fn near_one_cut(&self) -> f64 {
        self.near_one_cut
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, self.max_terms, self.near_one_cut)
    }

    pub fn with_max_terms(self, max_terms: usize) -> Result<Self> {
        Self::new(self.rel_tol, max_terms, self.near_one_cut)
    }

    pub fn with_near_one_cut(self, near_one_cut: f64) -> Result<Self> {
        Self::new(self.rel_tol, self.max_terms, near_one_cut)
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: Self::DEFAULT_REL_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
            near_one_cut: Self::DEFAULT_NEAR_ONE_CUT,
        }
    }
}

/// The generalization parameter `a`, restricted to `(0, 1/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Param(f64);

impl Param {
    pub fn new(a: f64) -> Result<Self> {
        if a > 0.0 && a <= 0.5 {
            Ok(Param(a))
        } else {
            Err(Error::domain("a", a, "(0, 1/2]"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `sin(pi a)`.
    pub fn sin_pi(self) -> f64 {
        (PI * self.0).sin()
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new(first: f64) -> Self {
        CompensatedSum { sum: first, comp: 0.0 }
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Rising factorial `x (x+1) ... (x+n-1)`.
pub fn pochhammer(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (x + k as f64))
}

/// Digamma function `Psi(x)` for `x > 0`.
///
/// The argument is shifted above 10 with `Psi(x) = Psi(x+1) - 1/x`, then the
/// asymptotic expansion is truncated after the `B_14` term.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("x", x, "(0, inf)"));
    }
    let mut acc = CompensatedSum::default();
    let mut z = x;
    while z < 10.0 {
        acc.add(-1.0 / z);
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    acc.add(z.ln());
    acc.add(-0.5 * inv);
    acc.add(-tail);
    Ok(acc.value())
}

/// `B_{2k} / (2k)!` for k = 1..5.
const EM_COEFFS: [f64; 5] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
];

const ZETA_HEAD_TERMS: u32 = 40;

/// Riemann zeta at an integer `m >= 2`.
///
/// Sums the first 39 terms directly and closes with the Euler–Maclaurin tail
/// started at n = 40.
pub fn zeta_int(m: i32) -> Result<f64> {
    if m < 2 {
        return Err(Error::domain("m", m as f64, "integers >= 2"));
    }
    let s = m as f64;
    let mut acc = CompensatedSum::default();
    for n in 1..ZETA_HEAD_TERMS {
        acc.add((n as f64).powi(-m));
    }
    let big_n = ZETA_HEAD_TERMS as f64;
    acc.add(big_n.powf(1.0 - s) / (s - 1.0));
    acc.add(0.5 * big_n.powi(-m));
    let mut rising = s;
    let mut power = big_n.powf(-s - 1.0);
    for (k, coeff) in EM_COEFFS.iter().enumerate() {
        acc.add(coeff * rising * power);
        let j = 2.0 * (k as f64 + 1.0);
        rising *= (s + j - 1.0) * (s + j);
        power /= big_n * big_n;
    }
    Ok(acc.value())
}

/// Sums `sum_n t_n` where `t_0 = first` and `t_{n+1} = t_n * ratio(n)`.
///
/// Stops once the geometric tail estimate `|t_n| / (1 - |ratio|)` drops
/// below `rel_tol * |sum|`.
pub(crate) fn sum_ratio_series(
    what: &'static str,
    first: f64,
    cfg: &EvalConfig,
    mut ratio: impl FnMut(f64) -> f64,
) -> Result<f64> {
    let mut term = first;
    let mut acc = CompensatedSum::new(first);
    for n in 0..cfg.max_terms {
        let q = ratio(n as f64);
        term *= q;
        acc.add(term);
        // geometric estimate of what is left once the ratio settles below 1
        let tail = if q.abs() < 1.0 {
            term.abs() / (1.0 - q.abs())
        } else {
            term.abs()
        };
        if tail <= cfg.rel_tol * acc.value().abs() {
            return Ok(acc.value());
        }
    }
    Err(Error::NonConvergence {
        what,
        terms: cfg.max_terms,
    })
}

/// Sums terms produced in order by `term(n)`, n = 0, 1, ...
///
/// Stops once two consecutive terms are below `rel_tol * |sum|`; the
/// logarithmic series below have coefficients that can pass through zero.
pub(crate) fn sum_terms(what: &'static str, cfg: &EvalConfig, mut term: impl FnMut(usize) -> f64) -> Result<f64> {
    let mut acc = CompensatedSum::default();
    let mut quiet = 0;
    for n in 0..cfg.max_terms {
        let t = term(n);
        acc.add(t);
        if n > 0 && t.abs() <= cfg.rel_tol * acc.value().abs() {
            quiet += 1;
            if quiet == 2 {
                return Ok(acc.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        what,
        terms: cfg.max_terms,
    })
}

/// Partial sum of the Gauss series `F(a, b; c; x)` for `|x| < 1`.
pub fn hyp2f1_series(a: f64, b: f64, c: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(x > -1.0 && x < 1.0) {
        return Err(Error::domain("x", x, "(-1, 1)"));
    }
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::domain("c", c, "reals except non-positive integers"));
    }
    sum_ratio_series("2F1 series", 1.0, cfg, |n| {
        (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
    })
}

/// `F(a, 1-a; 1; x)` near `x = 1`, from the logarithmic connection formula.
pub fn hyp2f1_k_near_one(a: Param, x: f64, cfg: &EvalConfig) -> Result<f64> {
    hyp2f1_k_near_one_comp(a, 1.0 - x, cfg)
}

/// As [`hyp2f1_k_near_one`], taking the complement `y = 1 - x` directly.
pub fn hyp2f1_k_near_one_comp(a: Param, y: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(y > 0.0 && y <= cfg.near_one_cut) {
        return Err(Error::domain(
            "1 - x",
            y,
            format!("(0, {}] (near-one cut)", cfg.near_one_cut),
        ));
    }
    let sum = NearOne::new(a, y, y.ln(), cfg)?.k_sum(false)?;
    Ok(a.sin_pi() / PI * sum)
}

/// Coefficients of the expansion of `F(a, 1-a; 1; 1-y)` in powers of `y`:
///
/// `F = sin(pi a)/pi * sum_n c_n (d_n - log y) y^n` with
/// `c_n = ((a)_n (1-a)_n) / (n!)^2` and
/// `d_n = 2 Psi(n+1) - Psi(a+n) - Psi(1-a+n)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogCoeffs {
    a: f64,
    n: usize,
    c: f64,
    d: f64,
}

impl LogCoeffs {
    pub(crate) fn new(a: Param) -> Result<Self> {
        let a = a.get();
        let d0 = -2.0 * EULER_GAMMA - digamma(a)? - digamma(1.0 - a)?;
        Ok(LogCoeffs { a, n: 0, c: 1.0, d: d0 })
    }
}

impl Iterator for LogCoeffs {
    /// `(n, c_n, d_n)`
    type Item = (usize, f64, f64);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.n, self.c, self.d);
        let n = self.n as f64;
        let a = self.a;
        self.c *= (a + n) * (1.0 - a + n) / ((n + 1.0) * (n + 1.0));
        self.d += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (1.0 - a + n);
        self.n += 1;
        Some(out)
    }
}

/// Series in `y = r'^2` for the quantities that blow up or cancel as `r -> 1`.
pub(crate) struct NearOne<'c> {
    a: Param,
    y: f64,
    log_y: f64,
    cfg: &'c EvalConfig,
    coeffs: LogCoeffs,
}

impl<'c> NearOne<'c> {
    /// `log_y` must be `ln(y)`; callers pass an accurately computed value.
    pub(crate) fn new(a: Param, y: f64, log_y: f64, cfg: &'c EvalConfig) -> Result<Self> {
        Ok(NearOne {
            a,
            y,
            log_y,
            cfg,
            coeffs: LogCoeffs::new(a)?,
        })
    }

    /// `sum_{n >= n0} c_n (d_n - L) y^n`, with `n0 = 1` when `skip_first`.
    ///
    /// `(sin(pi a)/2)` times the full sum is `K_a`; times the tail it is
    /// `K_a - sin(pi a) log(e^{R(a)/2}/r')`.
    pub(crate) fn k_sum(&self, skip_first: bool) -> Result<f64> {
        let (y, l) = (self.y, self.log_y);
        let mut coeffs = self.coeffs.skip(skip_first as usize);
        let mut ypow = if skip_first { y } else { 1.0 };
        sum_terms("near-one K series", self.cfg, |_| {
            let (_, c, d) = coeffs.next().expect("infinite");
            let t = c * (d - l) * ypow;
            ypow *= y;
            t
        })
    }

    /// Without `skip_first`: `P = sum_{n >= 0} c_n y^n [1 - n (d_n - L)]`, so that
    /// `E_a - r'^2 K_a = r^2 sin(pi a) / (2(1-a)) * P`.
    ///
    /// With `skip_first`: `sum_{n >= 1} c_n y^{n-1} [1 - n (d_n - L)]`, i.e. `(P - 1)/y`.
    pub(crate) fn em_sum(&self, skip_first: bool) -> Result<f64> {
        let (y, l) = (self.y, self.log_y);
        let mut coeffs = self.coeffs.skip(skip_first as usize);
        let mut ypow = 1.0;
        sum_terms("near-one E - r'^2 K series", self.cfg, |_| {
            let (n, c, d) = coeffs.next().expect("infinite");
            let t = c * (1.0 - n as f64 * (d - l)) * ypow;
            ypow *= y;
            t
        })
    }

    /// `sum_m y^m (alpha_m + beta_m L)`. The monotone quotient used by the
    /// bounds module equals `sin(pi a) * sum / r^2` in this form; the log
    /// terms that cancel at `m = 0` have been removed analytically.
    pub(crate) fn f_sum(&self) -> Result<f64> {
        let (y, l) = (self.y, self.log_y);
        let a = self.a.get();
        let ab = a * (1.0 - a);
        let mut coeffs = self.coeffs;
        let mut cur = coeffs.next().expect("infinite");
        let mut ypow = 1.0;
        sum_terms("near-one F series", self.cfg, |m| {
            let next = coeffs.next().expect("infinite");
            let (_, c, d) = cur;
            let (_, c1, d1) = next;
            let mf = m as f64;
            let u = c * (1.0 - mf * d);
            let v = mf * c;
            let u1 = c1 * (1.0 - (mf + 1.0) * d1);
            let v1 = (mf + 1.0) * c1;
            let (alpha, beta) = if m == 0 {
                (1.0 - ab * c * d - u1, ab * c - v1)
            } else {
                (-ab * c * d + 2.0 * u - u1, ab * c + 2.0 * v - v1)
            };
            let t = (alpha + beta * l) * ypow;
            ypow *= y;
            cur = next;
            t
        })
    }
}
