//! Numerics for multivector exponentials in the four 3D real Clifford
//! algebras Cl(0,3), Cl(3,0), Cl(1,2) and Cl(2,1).
//!
//! The crate provides:
//!
//! - exact arithmetic of 8-component multivectors over the fixed basis
//!   `{1, e1, e2, e3, e12, e13, e23, e123}` (geometric product, grade
//!   projection, involutions, determinant, inverse);
//! - coordinate-free closed-form exponentials for general multivectors in
//!   each signature, including every degenerate limit ([`exp_closed`]);
//! - an independent truncated-series exponential used as a cross-check and
//!   as a fallback for arbitrary arguments ([`exp_series_scaled`]);
//! - trigonometric/hyperbolic functions of multivector arguments
//!   ([`trig`]);
//! - closed-form propagators for linear multivector ODEs ([`ode`]).
//!
//! Coefficient storage order follows inverse degree lexicographic ordering
//! with strictly ascending digits inside each blade label (`e13`, never
//! `e31`); all formulas and signs depend on that convention.
//!
//! All values are immutable and all operations are pure; everything is safe
//! to use from multiple threads. The per-signature blade product tables are
//! built once behind a `OnceLock`.
//!
//! ```
//! use gaexp::{exp_closed, exp_series_scaled, Multivector, SeriesConfig, Signature};
//!
//! let sig = Signature::new(2, 1)?;
//! let a = Multivector::new(sig, [2.0, 0.0, 0.0, 1.0, 6.0, 0.0, 0.0, 3.0])?;
//! let closed = exp_closed(&a)?;
//! let series = exp_series_scaled(&a, &SeriesConfig::default())?;
//! assert!(closed.max_abs_diff(&series) < 1e-10);
//! # Ok::<(), gaexp::Error>(())
//! ```

mod error;
mod multivector;
mod product;
mod signature;

pub mod exp;
pub mod ode;
pub mod series;
pub mod trig;

pub use error::{Error, Result};
pub use exp::{
    exp_cl03, exp_cl21, exp_cl30_cl12, exp_closed, exp_closed_detailed, mixing_cl03, mixing_cl21,
    mixing_cl30, sinc_cos, Branch, ExpBreakdown, MixingScalars, SincCos,
};
pub use multivector::{Involution, Multivector, BLADE_COUNT, BLADE_GRADES, BLADE_NAMES};
pub use ode::{propagate_forced, propagate_homogeneous, propagate_two_sided, OdeProblem};
pub use product::{blade_product_entry, ABS_FLOOR, DET_RELATIVE_EPS};
pub use series::{
    exp_horner, exp_series_scaled, exp_series_scaled_with_stats, SeriesConfig, SeriesStats,
};
pub use signature::Signature;
