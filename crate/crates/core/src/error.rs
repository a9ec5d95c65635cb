use crate::signature::Signature;

/// Errors reported by the algebra kernel and the numerical engines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Two operands live in different algebras.
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),

    /// An operation was invoked on an algebra it is not defined for.
    #[error("operation requires {required}, got {found}")]
    WrongSignature {
        required: &'static str,
        found: Signature,
    },

    /// Grade argument outside the admissible set.
    #[error("grade {grade} out of range (allowed: {allowed})")]
    InvalidGrade { grade: usize, allowed: &'static str },

    /// `(p, q)` does not name one of the four supported algebras.
    #[error("unsupported signature ({p},{q}): p + q must equal 3")]
    InvalidSignature { p: u32, q: u32 },

    /// Determinant too close to zero for a stable inverse.
    #[error("singular multivector (|det| = {det:e} below threshold {threshold:e})")]
    Singular { det: f64, threshold: f64 },

    /// Input multivector carries a NaN or infinite coefficient.
    #[error("non-finite input coefficient")]
    NonFiniteInput,

    /// A computation overflowed to NaN or infinity.
    #[error("non-finite result (overflow)")]
    NonFiniteResult,

    /// Truncated series failed to converge within the term budget.
    #[error("series did not converge after {terms} terms (last correction {last_correction:e})")]
    NoConvergence { terms: usize, last_correction: f64 },

    /// Invalid series configuration.
    #[error("invalid series configuration: {0}")]
    BadConfig(&'static str),

    /// Requested problem shape is not handled.
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
