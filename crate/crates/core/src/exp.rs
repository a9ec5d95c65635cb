//! Closed-form multivector exponentials for the four 3D algebras.
//!
//! The scalar and pseudoscalar parts are central, so they factor out as
//! ordinary scalar/hyperbolic exponentials. What remains is the combined
//! vector + bivector part X = a + A, whose exponential is governed by the
//! two mixing scalars a₊ and a₋ built from a·a + A·A and I(a ∧ A).
//!
//! In Cl(0,3) and Cl(2,1) the pseudoscalar squares to +1 and (1 ± I)/2 are
//! central idempotents; the exponential splits into two half-formulas, each a
//! plain de Moivre form in a₊² or a₋². In Cl(3,0) and Cl(1,2), where I² = -1,
//! the algebra behaves like a complexified plane and the exponential combines
//! trigonometric functions of a₋ with hyperbolic functions of a₊.

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::product::ABS_FLOOR;
use crate::signature::Signature;

/// Relative threshold (against the squared input scale) under which
/// a₊² + a₋² is treated as zero and the degenerate limit formula applies.
pub const LIMIT_RELATIVE_EPS: f64 = 1e-12;

/// |x| below which `sinc_cos` switches to the power series for si.
pub const SINC_SERIES_EPS: f64 = 1e-8;

/// The entanglement scalars of one multivector in one algebra.
///
/// The signed squares are always set. A root field is populated when the
/// corresponding square is taken in that algebra's formula: in Cl(0,3) both
/// roots are nonnegative; in Cl(3,0)/Cl(1,2) `a_plus` is nonnegative while
/// `a_minus` carries the sign of -2I(a ∧ A); in Cl(2,1) a root is present
/// only when its square is nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingScalars {
    pub algebra: Signature,
    pub a_plus_sq: f64,
    pub a_minus_sq: f64,
    pub a_plus: Option<f64>,
    pub a_minus: Option<f64>,
}

/// Paired cosine-like and normalized sine-like values of a signed square.
///
/// For x > 0 this is (cos √x, sin √x / √x); for x < 0 it is
/// (cosh √-x, sinh √-x / √-x); both branches meet at (1, 1) as x -> 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SincCos {
    pub co: f64,
    pub si: f64,
}

/// Which functional branch a formula half went through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Trig,
    Hyperbolic,
    Limit,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Trig => "trig",
            Branch::Hyperbolic => "hyperbolic",
            Branch::Limit => "limit",
        }
    }
}

/// Exponential value together with the quantities that shaped it.
#[derive(Debug, Clone)]
pub struct ExpBreakdown {
    pub value: Multivector,
    pub mixing: MixingScalars,
    pub branch_plus: Branch,
    pub branch_minus: Branch,
}

/// Evaluates co and si of a signed square, switching between the
/// trigonometric and hyperbolic branches on the sign of `x_sq`.
///
/// Near zero, si is evaluated by its series 1 - x/6 + x²/120 in the signed
/// square (the same polynomial serves both branches), avoiding the 0/0 in
/// sin √x / √x.
pub fn sinc_cos(x_sq: f64) -> SincCos {
    if x_sq.abs() < SINC_SERIES_EPS {
        let co = if x_sq >= 0.0 {
            x_sq.sqrt().cos()
        } else {
            (-x_sq).sqrt().cosh()
        };
        let si = 1.0 - x_sq / 6.0 + x_sq * x_sq / 120.0;
        SincCos { co, si }
    } else if x_sq > 0.0 {
        let r = x_sq.sqrt();
        SincCos {
            co: r.cos(),
            si: r.sin() / r,
        }
    } else {
        let r = (-x_sq).sqrt();
        SincCos {
            co: r.cosh(),
            si: r.sinh() / r,
        }
    }
}

fn branch_of(x_sq: f64) -> Branch {
    if x_sq.abs() < SINC_SERIES_EPS {
        Branch::Limit
    } else if x_sq > 0.0 {
        Branch::Trig
    } else {
        Branch::Hyperbolic
    }
}

fn require_signature(a: &Multivector, wanted: &[Signature], name: &'static str) -> Result<()> {
    if wanted.contains(&a.signature()) {
        Ok(())
    } else {
        Err(Error::WrongSignature {
            required: name,
            found: a.signature(),
        })
    }
}

/// Signed squares common to the split-formula algebras:
/// a₋² = -(a·a + A·A) + 2I(a ∧ A), a₊² = -(a·a + A·A) - 2I(a ∧ A).
fn signed_squares(a: &Multivector) -> (f64, f64) {
    let s = a.quadratic_scalar(1).expect("k=1 valid") + a.quadratic_scalar(2).expect("k=2 valid");
    let w = a.wedge_mix_scalar();
    (-s + 2.0 * w, -s - 2.0 * w)
}

/// Mixing scalars in Cl(0,3). Both squares are sums of three real squares
/// ((a3 ± a12)² + (a2 ∓ a13)² + (a1 ± a23)²), hence nonnegative; tiny
/// negative values from cancellation are clamped before the root.
pub fn mixing_cl03(a: &Multivector) -> Result<MixingScalars> {
    require_signature(a, &[Signature::Cl03], "Cl(0,3)")?;
    let (am2, ap2) = signed_squares(a);
    let am2 = am2.max(0.0);
    let ap2 = ap2.max(0.0);
    Ok(MixingScalars {
        algebra: a.signature(),
        a_plus_sq: ap2,
        a_minus_sq: am2,
        a_plus: Some(ap2.sqrt()),
        a_minus: Some(am2.sqrt()),
    })
}

/// Mixing scalars in Cl(3,0) and Cl(1,2).
///
/// With S = a·a + A·A and s the e123 coefficient of a ∧ A (so that
/// -2I(a ∧ A) = 2s under I² = -1), the generic case s != 0 gives
/// a₊ = sqrt((S + r)/2) and a₋ = 2s / sqrt(2(S + r)) with r = sqrt(S² + 4s²).
/// Both are computed in cancellation-free forms so that S < 0 with tiny s
/// does not underflow. When s = 0 the pair degenerates to (sqrt(S), 0) for
/// S > 0, (0, sqrt(-S)) for S < 0 and (0, 0) at S = 0.
pub fn mixing_cl30(a: &Multivector) -> Result<MixingScalars> {
    require_signature(a, &[Signature::Cl30, Signature::Cl12], "Cl(3,0) or Cl(1,2)")?;
    let big_s =
        a.quadratic_scalar(1).expect("k=1 valid") + a.quadratic_scalar(2).expect("k=2 valid");
    let s = a.wedge_coefficient();
    let (ap, am) = if s == 0.0 {
        if big_s > 0.0 {
            (big_s.sqrt(), 0.0)
        } else if big_s < 0.0 {
            (0.0, (-big_s).sqrt())
        } else {
            (0.0, 0.0)
        }
    } else {
        let r = f64::hypot(big_s, 2.0 * s);
        if big_s >= 0.0 {
            let ap = ((big_s + r) / 2.0).sqrt();
            let am = 2.0 * s / (2.0 * (big_s + r)).sqrt();
            (ap, am)
        } else {
            // S + r = 4s²/(r - S); r - S has no cancellation for S < 0.
            let ap = std::f64::consts::SQRT_2 * s.abs() / (r - big_s).sqrt();
            let am = ((r - big_s) / 2.0).sqrt().copysign(s);
            (ap, am)
        }
    };
    Ok(MixingScalars {
        algebra: a.signature(),
        a_plus_sq: ap * ap,
        a_minus_sq: am * am,
        a_plus: Some(ap),
        a_minus: Some(am),
    })
}

/// Mixing scalars in Cl(2,1): the signed squares themselves; no roots are
/// taken unless a square happens to be nonnegative.
pub fn mixing_cl21(a: &Multivector) -> Result<MixingScalars> {
    require_signature(a, &[Signature::Cl21], "Cl(2,1)")?;
    let (am2, ap2) = signed_squares(a);
    Ok(MixingScalars {
        algebra: a.signature(),
        a_plus_sq: ap2,
        a_minus_sq: am2,
        a_plus: (ap2 >= 0.0).then(|| ap2.sqrt()),
        a_minus: (am2 >= 0.0).then(|| am2.sqrt()),
    })
}

/// Shared evaluator for the idempotent-split algebras (I² = +1):
///
/// exp(A) = e^{a0}/2 [ e^{a123} (1 + I)(co(a₊²) + si(a₊²) X)
///                   + e^{-a123} (1 - I)(co(a₋²) + si(a₋²) X) ].
fn exp_idempotent_split(a: &Multivector, mix: &MixingScalars) -> ExpBreakdown {
    let sig = a.signature();
    let x = a.vector_bivector();
    let one = Multivector::one(sig);
    let i = Multivector::pseudoscalar(sig, 1.0);
    let p = sinc_cos(mix.a_plus_sq);
    let m = sinc_cos(mix.a_minus_sq);
    let a0 = a.coeff(0);
    let a123 = a.coeff(7);
    let half_plus = (one + i) * (Multivector::scalar(sig, p.co) + x * p.si) * a123.exp();
    let half_minus = (one - i) * (Multivector::scalar(sig, m.co) + x * m.si) * (-a123).exp();
    let value = (half_plus + half_minus) * (0.5 * a0.exp());
    ExpBreakdown {
        value,
        mixing: *mix,
        branch_plus: branch_of(mix.a_plus_sq),
        branch_minus: branch_of(mix.a_minus_sq),
    }
}

fn check_input(a: &Multivector) -> Result<()> {
    if a.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteInput)
    }
}

fn check_output(b: ExpBreakdown) -> Result<ExpBreakdown> {
    if b.value.is_finite() {
        Ok(b)
    } else {
        Err(Error::NonFiniteResult)
    }
}

fn exp_cl03_detailed(a: &Multivector) -> Result<ExpBreakdown> {
    check_input(a)?;
    let mix = mixing_cl03(a)?;
    check_output(exp_idempotent_split(a, &mix))
}

fn exp_cl21_detailed(a: &Multivector) -> Result<ExpBreakdown> {
    check_input(a)?;
    let mix = mixing_cl21(a)?;
    check_output(exp_idempotent_split(a, &mix))
}

/// exp(A) in Cl(3,0) and Cl(1,2):
///
/// exp(A) = e^{a0}(cos a123 + I sin a123) ·
///          [ cos a₋ cosh a₊ + I sin a₋ sinh a₊
///            + (cosh a₊ sin a₋ - I cos a₋ sinh a₊)
///              (a₋ X + a₊ I X) / (a₊² + a₋²) ],
///
/// with the degenerate limit e^{a0}(cos a123 + I sin a123)(1 + X) once
/// a₊² + a₋² vanishes (then X is nilpotent and the series stops at 1 + X).
fn exp_cl30_cl12_detailed(a: &Multivector) -> Result<ExpBreakdown> {
    check_input(a)?;
    let mix = mixing_cl30(a)?;
    let sig = a.signature();
    let ap = mix.a_plus.expect("set for this family");
    let am = mix.a_minus.expect("set for this family");
    let x = a.vector_bivector();
    let i = Multivector::pseudoscalar(sig, 1.0);
    let a0 = a.coeff(0);
    let a123 = a.coeff(7);
    let prefactor = (Multivector::scalar(sig, a123.cos()) + i * a123.sin()) * a0.exp();

    let n2 = ap * ap + am * am;
    let scale = a.max_abs();
    let threshold = (LIMIT_RELATIVE_EPS * scale * scale).max(ABS_FLOOR);
    if n2 <= threshold {
        let value = prefactor * (Multivector::one(sig) + x);
        return check_output(ExpBreakdown {
            value,
            mixing: mix,
            branch_plus: Branch::Limit,
            branch_minus: Branch::Limit,
        });
    }

    let f = Multivector::scalar(sig, am.cos() * ap.cosh()) + i * (am.sin() * ap.sinh());
    let g = Multivector::scalar(sig, ap.cosh() * am.sin()) - i * (am.cos() * ap.sinh());
    let w = (x * am + i * x * ap) * (1.0 / n2);
    let value = prefactor * (f + g * w);
    check_output(ExpBreakdown {
        value,
        mixing: mix,
        branch_plus: if ap == 0.0 {
            Branch::Limit
        } else {
            Branch::Hyperbolic
        },
        branch_minus: if am == 0.0 {
            Branch::Limit
        } else {
            Branch::Trig
        },
    })
}

/// Closed-form exponential in Cl(0,3).
pub fn exp_cl03(a: &Multivector) -> Result<Multivector> {
    exp_cl03_detailed(a).map(|b| b.value)
}

/// Closed-form exponential in Cl(3,0) or Cl(1,2).
pub fn exp_cl30_cl12(a: &Multivector) -> Result<Multivector> {
    exp_cl30_cl12_detailed(a).map(|b| b.value)
}

/// Closed-form exponential in Cl(2,1).
pub fn exp_cl21(a: &Multivector) -> Result<Multivector> {
    exp_cl21_detailed(a).map(|b| b.value)
}

/// Closed-form exponential, dispatching on the algebra of the argument.
pub fn exp_closed(a: &Multivector) -> Result<Multivector> {
    exp_closed_detailed(a).map(|b| b.value)
}

/// Closed-form exponential with mixing scalars and branch report.
pub fn exp_closed_detailed(a: &Multivector) -> Result<ExpBreakdown> {
    match a.signature() {
        Signature::Cl03 => exp_cl03_detailed(a),
        Signature::Cl30 | Signature::Cl12 => exp_cl30_cl12_detailed(a),
        Signature::Cl21 => exp_cl21_detailed(a),
    }
}

impl Multivector {
    /// Closed-form exponential of this multivector.
    pub fn exp(&self) -> Result<Multivector> {
        exp_closed(self)
    }
}
