//! Truncated-series exponential: the independent reference engine.
//!
//! [`exp_horner`] is the fixed-depth nested (Horner) evaluation of the
//! truncated exponential series. [`exp_series_scaled`] is the adaptive
//! engine: it scales the argument by a power of two, accumulates the forward
//! power series term by term, and squares the result back up.
//!
//! Convergence rule: the correction added by each term is measured by its
//! largest coefficient, and the sum is accepted only after two consecutive
//! corrections fall below the tolerance. A single small correction is not
//! trusted because the series converges non-monotonically for oscillatory
//! arguments. (The alternative allowed design, re-running the nested form at
//! depth n+1 and differencing, was not chosen; forward accumulation gives the
//! same sums with one pass.)

use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// Controls for [`exp_series_scaled`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Hard cap on accumulated terms (after scaling).
    pub max_terms: usize,
    /// Largest acceptable per-term correction (max-abs coefficient).
    pub target_tol: f64,
    /// Max-abs coefficient above which the argument gets halved.
    pub scale_threshold: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            max_terms: 200,
            target_tol: 1e-16,
            scale_threshold: 1.0,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_terms == 0 {
            return Err(Error::BadConfig("max_terms must be >= 1"));
        }
        if self.target_tol.is_nan() || self.target_tol <= 0.0 {
            return Err(Error::BadConfig("target_tol must be > 0"));
        }
        if self.scale_threshold.is_nan() || self.scale_threshold <= 0.0 {
            return Err(Error::BadConfig("scale_threshold must be > 0"));
        }
        Ok(())
    }
}

/// How a scaled series evaluation went.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesStats {
    /// Terms accumulated beyond the leading 1.
    pub terms_used: usize,
    /// k in the 2^k argument scaling.
    pub scaling_exponent: u32,
}

/// Degree-n truncated exponential by the nested iteration
/// B <- 1 + B·(A/s) for s = n, n-1, ..., 1 starting from B = 1.
pub fn exp_horner(a: &Multivector, n: usize) -> Multivector {
    assert!(n >= 1, "series depth must be >= 1");
    let sig = a.signature();
    let one = Multivector::one(sig);
    let mut b = one;
    for s in (1..=n).rev() {
        b = one + b * (*a / s as f64);
    }
    b
}

/// Scaled-and-squared series exponential.
///
/// Picks the smallest k with max-abs(A)/2^k <= `scale_threshold`, sums the
/// series of A/2^k under the two-consecutive-corrections rule, then squares
/// the partial result k times.
pub fn exp_series_scaled(a: &Multivector, cfg: &SeriesConfig) -> Result<Multivector> {
    exp_series_scaled_with_stats(a, cfg).map(|(value, _)| value)
}

/// Same as [`exp_series_scaled`], also reporting term count and scaling.
pub fn exp_series_scaled_with_stats(
    a: &Multivector,
    cfg: &SeriesConfig,
) -> Result<(Multivector, SeriesStats)> {
    cfg.validate()?;
    if !a.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let mut k = 0u32;
    let mut scale = a.max_abs();
    while scale > cfg.scale_threshold {
        scale /= 2.0;
        k += 1;
    }
    let scaled = *a * 0.5f64.powi(k as i32);

    let mut sum = Multivector::one(a.signature());
    let mut term = sum;
    let mut below = 0u32;
    let mut terms_used = 0usize;
    loop {
        terms_used += 1;
        term = term * (scaled * (1.0 / terms_used as f64));
        sum += term;
        let correction = term.max_abs();
        if correction < cfg.target_tol {
            below += 1;
            if below >= 2 {
                break;
            }
        } else {
            below = 0;
        }
        if terms_used >= cfg.max_terms {
            return Err(Error::NoConvergence {
                terms: terms_used,
                last_correction: correction,
            });
        }
    }

    for _ in 0..k {
        sum = sum * sum;
    }
    if !sum.is_finite() {
        return Err(Error::NonFiniteResult);
    }
    Ok((
        sum,
        SeriesStats {
            terms_used,
            scaling_exponent: k,
        },
    ))
}
