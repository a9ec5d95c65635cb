//! Propagators for linear multivector ODEs.
//!
//! dX/dt = A X has the closed solution X(t) = exp(tA) X0; the two-sided
//! system dX/dt = A X + X B is solved by exp(tA) X0 exp(tB). A forcing term
//! adds the convolution integral of exp((t-s)A) f(s), evaluated by composite
//! Simpson quadrature on a uniform grid. The propagators are exact in t; only
//! that integral is discretized.

use crate::error::{Error, Result};
use crate::exp::exp_closed;
use crate::multivector::Multivector;

/// One linear ODE setup: coefficients, initial value, optional right-hand
/// coefficient and forcing, end time, quadrature resolution.
pub struct OdeProblem<F = fn(f64) -> Multivector>
where
    F: Fn(f64) -> Multivector,
{
    pub a: Multivector,
    pub b: Option<Multivector>,
    pub x0: Multivector,
    pub forcing: Option<F>,
    pub t_end: f64,
    pub steps: usize,
}

impl<F: Fn(f64) -> Multivector> OdeProblem<F> {
    /// Evaluates X(t_end) for whichever of the three forms the fields select.
    pub fn solve(&self) -> Result<Multivector> {
        if !self.t_end.is_finite() {
            return Err(Error::NonFiniteInput);
        }
        match (&self.b, &self.forcing) {
            (Some(_), Some(_)) => Err(Error::Unsupported(
                "forcing combined with a two-sided coefficient",
            )),
            (Some(b), None) => propagate_two_sided(&self.a, b, &self.x0, self.t_end),
            (None, Some(f)) => propagate_forced(&self.a, &self.x0, f, self.t_end, self.steps),
            (None, None) => propagate_homogeneous(&self.a, &self.x0, self.t_end),
        }
    }
}

fn same_signature(a: &Multivector, b: &Multivector) -> Result<()> {
    if a.signature() == b.signature() {
        Ok(())
    } else {
        Err(Error::SignatureMismatch(a.signature(), b.signature()))
    }
}

/// X(t) = exp(tA) X0, the solution of dX/dt = A X, X(0) = X0.
pub fn propagate_homogeneous(a: &Multivector, x0: &Multivector, t: f64) -> Result<Multivector> {
    same_signature(a, x0)?;
    Ok(exp_closed(&(*a * t))? * *x0)
}

/// X(t) = exp(tA) X0 exp(tB), the solution of dX/dt = A X + X B, X(0) = X0.
pub fn propagate_two_sided(
    a: &Multivector,
    b: &Multivector,
    x0: &Multivector,
    t: f64,
) -> Result<Multivector> {
    same_signature(a, x0)?;
    same_signature(a, b)?;
    Ok(exp_closed(&(*a * t))? * *x0 * exp_closed(&(*b * t))?)
}

/// X(t) = exp(tA) X0 + ∫₀ᵗ exp((t-s)A) f(s) ds with the integral evaluated
/// by composite Simpson quadrature (`steps` is rounded up to even).
pub fn propagate_forced<F: Fn(f64) -> Multivector>(
    a: &Multivector,
    x0: &Multivector,
    forcing: F,
    t: f64,
    steps: usize,
) -> Result<Multivector> {
    same_signature(a, x0)?;
    let homogeneous = propagate_homogeneous(a, x0, t)?;
    if t == 0.0 {
        return Ok(homogeneous);
    }
    let steps = if steps < 2 {
        2
    } else if steps % 2 == 1 {
        steps + 1
    } else {
        steps
    };
    let h = t / steps as f64;
    let integrand = |s: f64| -> Result<Multivector> {
        let f = forcing(s);
        same_signature(a, &f)?;
        Ok(exp_closed(&(*a * (t - s)))? * f)
    };
    let mut total = integrand(0.0)? + integrand(t)?;
    for i in 1..steps {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        total += integrand(i as f64 * h)? * weight;
    }
    Ok(homogeneous + total * (h / 3.0))
}
