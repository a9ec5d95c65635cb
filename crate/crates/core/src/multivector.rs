use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::signature::Signature;

/// Number of basis blades in a 3D algebra.
pub const BLADE_COUNT: usize = 8;

/// Blade labels in storage order. Digits inside a label are strictly
/// ascending (`e13`, never `e31`); the sign conventions of the whole crate
/// depend on this ordering.
pub const BLADE_NAMES: [&str; BLADE_COUNT] = ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"];

/// Bitmask of basis-vector factors per blade (bit k set means e(k+1) is a factor).
pub(crate) const BLADE_MASKS: [u8; BLADE_COUNT] =
    [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

/// Grade (number of factors) of each blade in storage order.
pub const BLADE_GRADES: [usize; BLADE_COUNT] = [0, 1, 1, 1, 2, 2, 2, 3];

/// The three standard involutions, identified by their per-grade sign
/// patterns over grades 0..=3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// Signs (+, +, -, -).
    Reverse,
    /// Signs (+, -, +, -).
    GradeInvolution,
    /// Signs (+, -, -, +).
    CliffordConjugate,
}

impl Involution {
    pub(crate) fn grade_signs(self) -> [f64; 4] {
        match self {
            Involution::Reverse => [1.0, 1.0, -1.0, -1.0],
            Involution::GradeInvolution => [1.0, -1.0, 1.0, -1.0],
            Involution::CliffordConjugate => [1.0, -1.0, -1.0, 1.0],
        }
    }
}

/// A general multivector: eight finite f64 coefficients over the fixed basis
/// `{1, e1, e2, e3, e12, e13, e23, e123}`, tagged with its algebra.
///
/// Values are immutable; every operation returns a fresh value, so instances
/// can be shared freely across threads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector {
    sig: Signature,
    c: [f64; BLADE_COUNT],
}

impl Multivector {
    /// Builds a multivector from raw coefficients, rejecting NaN/infinite entries.
    pub fn new(sig: Signature, coeffs: [f64; BLADE_COUNT]) -> Result<Self> {
        if coeffs.iter().all(|x| x.is_finite()) {
            Ok(Multivector { sig, c: coeffs })
        } else {
            Err(Error::NonFiniteInput)
        }
    }

    /// Internal constructor for values produced by arithmetic on validated inputs.
    pub(crate) fn from_coeffs_unchecked(sig: Signature, c: [f64; BLADE_COUNT]) -> Self {
        Multivector { sig, c }
    }

    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, c: [0.0; 8] }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        assert!(value.is_finite(), "scalar coefficient must be finite");
        let mut c = [0.0; 8];
        c[0] = value;
        Multivector { sig, c }
    }

    pub fn one(sig: Signature) -> Self {
        Multivector::scalar(sig, 1.0)
    }

    pub fn pseudoscalar(sig: Signature, value: f64) -> Self {
        assert!(value.is_finite(), "coefficient must be finite");
        let mut c = [0.0; 8];
        c[7] = value;
        Multivector { sig, c }
    }

    /// Unit basis blade by storage index (0 = scalar, ..., 7 = e123).
    pub fn basis_blade(sig: Signature, idx: usize) -> Self {
        assert!(idx < BLADE_COUNT, "blade index {idx} out of range");
        let mut c = [0.0; 8];
        c[idx] = 1.0;
        Multivector { sig, c }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64; BLADE_COUNT] {
        &self.c
    }

    pub fn coeff(&self, idx: usize) -> f64 {
        self.c[idx]
    }

    /// Grade-k projection. The four projections sum back to the original value.
    pub fn grade(&self, k: usize) -> Result<Self> {
        if k > 3 {
            return Err(Error::InvalidGrade {
                grade: k,
                allowed: "0..=3",
            });
        }
        let c = std::array::from_fn(|i| if BLADE_GRADES[i] == k { self.c[i] } else { 0.0 });
        Ok(Multivector { sig: self.sig, c })
    }

    /// The combined vector + bivector part (grades 1 and 2).
    pub fn vector_bivector(&self) -> Self {
        let mut c = [0.0; 8];
        c[1..7].copy_from_slice(&self.c[1..7]);
        Multivector { sig: self.sig, c }
    }

    pub fn involution(&self, kind: Involution) -> Self {
        let signs = kind.grade_signs();
        let c = std::array::from_fn(|i| signs[BLADE_GRADES[i]] * self.c[i]);
        Multivector { sig: self.sig, c }
    }

    pub fn reverse(&self) -> Self {
        self.involution(Involution::Reverse)
    }

    pub fn grade_involution(&self) -> Self {
        self.involution(Involution::GradeInvolution)
    }

    pub fn clifford_conjugate(&self) -> Self {
        self.involution(Involution::CliffordConjugate)
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }

    /// Largest coefficientwise |self - other|. Panics on signature mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        let mut c = self.c;
        for (x, r) in c.iter_mut().zip(rhs.c.iter()) {
            *x += r;
        }
        Multivector { sig: self.sig, c }
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        for (x, r) in self.c.iter_mut().zip(rhs.c.iter()) {
            *x += r;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        let mut c = self.c;
        for (x, r) in c.iter_mut().zip(rhs.c.iter()) {
            *x -= r;
        }
        Multivector { sig: self.sig, c }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        let mut c = self.c;
        for x in &mut c {
            *x = -*x;
        }
        Multivector { sig: self.sig, c }
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        let mut c = self.c;
        for x in &mut c {
            *x *= rhs;
        }
        Multivector { sig: self.sig, c }
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

impl Div<f64> for Multivector {
    type Output = Multivector;
    fn div(self, rhs: f64) -> Multivector {
        let mut c = *self.coeffs();
        for x in &mut c {
            *x /= rhs;
        }
        Multivector { sig: self.sig, c }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &v) in self.c.iter().enumerate() {
            if v == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if v < 0.0 { "-" } else { "+" })?;
            } else if v < 0.0 {
                write!(f, "-")?;
            }
            let a = v.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{}", BLADE_NAMES[i])?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
