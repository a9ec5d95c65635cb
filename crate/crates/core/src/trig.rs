//! Trigonometric and hyperbolic functions of a multivector argument.
//!
//! Hyperbolic functions come straight from the closed-form exponential.
//! For cos/sin the route depends on the pseudoscalar square: where I² = -1
//! the pseudoscalar plays the imaginary unit and cos A = (e^{IA} + e^{-IA})/2;
//! where I² = +1 no such unit exists and the even/odd split of the power
//! series is summed directly (on a halved argument, recombined by the
//! double-angle identities, which keeps the series in its fast-converging
//! regime).

use crate::error::Result;
use crate::exp::exp_closed;
use crate::multivector::Multivector;
use crate::series::SeriesConfig;

/// cosh A = (exp(A) + exp(-A)) / 2.
pub fn cosh(a: &Multivector) -> Result<Multivector> {
    let p = exp_closed(a)?;
    let m = exp_closed(&-*a)?;
    Ok((p + m) * 0.5)
}

/// sinh A = (exp(A) - exp(-A)) / 2.
pub fn sinh(a: &Multivector) -> Result<Multivector> {
    let p = exp_closed(a)?;
    let m = exp_closed(&-*a)?;
    Ok((p - m) * 0.5)
}

/// cos of a multivector argument.
pub fn cos(a: &Multivector) -> Result<Multivector> {
    Ok(cos_sin(a)?.0)
}

/// sin of a multivector argument.
pub fn sin(a: &Multivector) -> Result<Multivector> {
    Ok(cos_sin(a)?.1)
}

/// cos and sin together (they share all the work).
pub fn cos_sin(a: &Multivector) -> Result<(Multivector, Multivector)> {
    let sig = a.signature();
    if sig.pseudoscalar_square() < 0.0 {
        let i = Multivector::pseudoscalar(sig, 1.0);
        let ia = i * *a;
        let ep = exp_closed(&ia)?;
        let em = exp_closed(&-ia)?;
        let c = (ep + em) * 0.5;
        let s = (ep - em) * (i * 2.0).inverse().expect("2I is invertible");
        Ok((c, s))
    } else {
        cos_sin_series(a)
    }
}

/// Even/odd series split for the I² = +1 algebras:
/// cos A = Σ (-1)^k A^{2k}/(2k)!, sin A = A · Σ (-1)^k A^{2k}/(2k+1)!.
/// The argument is halved until its largest coefficient is below 0.25, both
/// sums are accumulated in the variable -A², and the double-angle step
/// (c, s) -> (2c² - 1, 2sc) is applied once per halving.
fn cos_sin_series(a: &Multivector) -> Result<(Multivector, Multivector)> {
    const REDUCTION_THRESHOLD: f64 = 0.25;
    let cfg = SeriesConfig::default();
    let sig = a.signature();
    let one = Multivector::one(sig);

    let mut halvings = 0u32;
    let mut scale = a.max_abs();
    while scale > REDUCTION_THRESHOLD {
        scale /= 2.0;
        halvings += 1;
    }
    let arg = *a * 0.5f64.powi(halvings as i32);
    let minus_sq = -(arg * arg);

    // ratio of consecutive terms: /( (2k-1)(2k) ) for cos, /( (2k)(2k+1) ) for sin
    let mut c = one;
    let mut s_inner = one;
    for (acc, offset) in [(&mut c, 0usize), (&mut s_inner, 1usize)] {
        let mut term = one;
        let mut below = 0u32;
        let mut k = 0usize;
        loop {
            k += 1;
            let denom = ((2 * k - 1 + offset) * (2 * k + offset)) as f64;
            term = term * (minus_sq * (1.0 / denom));
            *acc += term;
            if term.max_abs() < cfg.target_tol {
                below += 1;
                if below >= 2 {
                    break;
                }
            } else {
                below = 0;
            }
            if k >= cfg.max_terms {
                return Err(crate::error::Error::NoConvergence {
                    terms: k,
                    last_correction: term.max_abs(),
                });
            }
        }
    }
    let mut s = arg * s_inner;
    for _ in 0..halvings {
        let c2 = c * c * 2.0 - one;
        s = s * c * 2.0;
        c = c2;
    }
    if c.is_finite() && s.is_finite() {
        Ok((c, s))
    } else {
        Err(crate::error::Error::NonFiniteResult)
    }
}
