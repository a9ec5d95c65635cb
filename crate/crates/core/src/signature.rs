use std::fmt;

use crate::error::{Error, Result};

/// One of the four real Clifford algebras Cl(p,q) with p + q = 3.
///
/// `p` basis vectors square to +1 and `q` to -1; basis vector `i` (1-based)
/// squares to +1 exactly when `i <= p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Signature {
    /// Cl(0,3): e1² = e2² = e3² = -1.
    Cl03,
    /// Cl(3,0): e1² = e2² = e3² = +1.
    Cl30,
    /// Cl(1,2): e1² = +1, e2² = e3² = -1.
    Cl12,
    /// Cl(2,1): e1² = e2² = +1, e3² = -1.
    Cl21,
}

impl Signature {
    pub const ALL: [Signature; 4] = [
        Signature::Cl03,
        Signature::Cl30,
        Signature::Cl12,
        Signature::Cl21,
    ];

    /// Builds a signature from `(p, q)`; only the four 3D algebras are admissible.
    pub fn new(p: u32, q: u32) -> Result<Self> {
        match (p, q) {
            (0, 3) => Ok(Signature::Cl03),
            (3, 0) => Ok(Signature::Cl30),
            (1, 2) => Ok(Signature::Cl12),
            (2, 1) => Ok(Signature::Cl21),
            _ => Err(Error::InvalidSignature { p, q }),
        }
    }

    pub fn p(self) -> u32 {
        match self {
            Signature::Cl03 => 0,
            Signature::Cl30 => 3,
            Signature::Cl12 => 1,
            Signature::Cl21 => 2,
        }
    }

    pub fn q(self) -> u32 {
        3 - self.p()
    }

    /// Square of basis vector `i` (1-based, `i` in 1..=3): +1 for i <= p, -1 otherwise.
    pub fn basis_square(self, i: u32) -> f64 {
        assert!((1..=3).contains(&i), "basis vector index {i} out of 1..=3");
        if i <= self.p() {
            1.0
        } else {
            -1.0
        }
    }

    /// Square of the pseudoscalar e123: equals -(-1)^q, i.e. +1 in Cl(0,3)
    /// and Cl(2,1), -1 in Cl(3,0) and Cl(1,2).
    pub fn pseudoscalar_square(self) -> f64 {
        match self {
            Signature::Cl03 | Signature::Cl21 => 1.0,
            Signature::Cl30 | Signature::Cl12 => -1.0,
        }
    }

    pub(crate) fn table_index(self) -> usize {
        match self {
            Signature::Cl03 => 0,
            Signature::Cl30 => 1,
            Signature::Cl12 => 2,
            Signature::Cl21 => 3,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p(), self.q())
    }
}
