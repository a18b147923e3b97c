//! Generalized complete elliptic integrals `K_a`, `E_a`, the Ramanujan
//! constant function `R(x)`, and the sharp logarithmic envelope
//!
//! ```text
//! 1 + alpha0 r'^2 < K_a(r) / (sin(pi a) log(e^{R(a)/2} / r')) < 1 + beta0 r'^2
//! ```
//!
//! for `a` in `(0, 1/2]`, along with a numerical verification catalogue for
//! every inequality, limit and monotonicity statement around it.
//!
//! ```
//! use ellint_core::{ellk_gen, EvalConfig, ModulusPoint, Param};
//!
//! let cfg = EvalConfig::default();
//! let k = ellk_gen(Param::new(0.5)?, ModulusPoint::new(0.6)?, &cfg)?;
//! assert!((k - 1.7507538029157525).abs() < 1e-14);
//! # Ok::<(), ellint_core::Error>(())
//! ```

pub mod bounds;
pub mod elliptic;
mod error;
pub mod ramanujan;
pub mod special;
pub mod verify;

pub use bounds::{
    envelope, envelope_scan, envelope_scan_with, envelope_with, f_lemma33, g_lambda, h_lambda, ratio_rho,
    sharp_constants, sharpness_scan, EnvelopeReport, SharpConstants, Side, ViolationWitness,
};
pub use elliptic::{d_elle_gen, d_ellk_gen, elle_gen, elle_gen_at_one, ellk_gen, em_combo, ModulusPoint};
pub use error::{Error, Result};
pub use ramanujan::{cor24_gap, cor25_gap, eta, r_def, r_series, rs_product, sine_gap, xi, RArgument};
pub use special::{
    digamma, hyp2f1_k_near_one, hyp2f1_k_near_one_comp, hyp2f1_series, pochhammer, zeta_int, EvalConfig, Param,
    EULER_GAMMA,
};
