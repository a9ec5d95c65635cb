//! Geometric product and the scalar quantities derived from it.
//!
//! The 8x8 blade product table for each signature is generated once, at first
//! use, from the anticommutation rule e_i e_j = -e_j e_i (i != j) and the
//! basis squares of the signature. Blades are bitmasks over {e1,e2,e3}; the
//! sign of a blade product is the parity of the transpositions needed to
//! interleave the right factors into the left ones, times the metric factor
//! of every repeated basis vector. Descending-index products are rewritten to
//! the ascending-label convention here (e3 e1 = -e13), never stored.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::multivector::{Multivector, BLADE_COUNT, BLADE_MASKS};
use crate::signature::Signature;

/// Relative threshold deciding when a determinant counts as zero
/// (scaled by the fourth power of the largest coefficient).
pub const DET_RELATIVE_EPS: f64 = 1e-12;

/// Absolute floor under every relative threshold.
pub const ABS_FLOOR: f64 = 1e-300;

type Table = [[(f64, usize); BLADE_COUNT]; BLADE_COUNT];

/// Sign and result blade of a single blade product, from bitmasks.
fn blade_product(sig: Signature, mi: u8, mj: u8) -> (f64, usize) {
    let mut sign = 1.0;
    // For each factor of the left blade, count right factors with a lower
    // index; each such pair is one transposition when merging to ascending
    // order.
    for b in 0..3u8 {
        if (mi >> b) & 1 == 1 {
            let lower = mj & ((1 << b) - 1);
            if lower.count_ones() % 2 == 1 {
                sign = -sign;
            }
        }
    }
    let common = mi & mj;
    for b in 0..3u8 {
        if (common >> b) & 1 == 1 {
            sign *= sig.basis_square(u32::from(b) + 1);
        }
    }
    let mask = mi ^ mj;
    let idx = BLADE_MASKS.iter().position(|&m| m == mask).unwrap();
    (sign, idx)
}

fn build_table(sig: Signature) -> Table {
    let mut t = [[(0.0, 0); BLADE_COUNT]; BLADE_COUNT];
    for i in 0..BLADE_COUNT {
        for j in 0..BLADE_COUNT {
            t[i][j] = blade_product(sig, BLADE_MASKS[i], BLADE_MASKS[j]);
        }
    }
    t
}

fn tables() -> &'static [Table; 4] {
    static TABLES: OnceLock<[Table; 4]> = OnceLock::new();
    TABLES.get_or_init(|| {
        [
            build_table(Signature::Cl03),
            build_table(Signature::Cl30),
            build_table(Signature::Cl12),
            build_table(Signature::Cl21),
        ]
    })
}

/// Sign and result blade index for `blade[i] * blade[j]` in `sig`.
/// Exposed for table-level inspection and cross-checks.
pub fn blade_product_entry(sig: Signature, i: usize, j: usize) -> (f64, usize) {
    tables()[sig.table_index()][i][j]
}

pub(crate) fn gp_unchecked(sig: Signature, a: &[f64; 8], b: &[f64; 8]) -> [f64; 8] {
    let t = &tables()[sig.table_index()];
    let mut out = [0.0f64; 8];
    for i in 0..BLADE_COUNT {
        let ai = a[i];
        if ai == 0.0 {
            continue;
        }
        let row = &t[i];
        for j in 0..BLADE_COUNT {
            let bj = b[j];
            if bj == 0.0 {
                continue;
            }
            let (sign, idx) = row[j];
            out[idx] += sign * ai * bj;
        }
    }
    out
}

impl Multivector {
    /// Clifford geometric product. Fails if the operands live in different
    /// algebras; the `*` operator panics instead.
    pub fn geometric_product(&self, rhs: &Multivector) -> Result<Multivector> {
        if self.signature() != rhs.signature() {
            return Err(Error::SignatureMismatch(self.signature(), rhs.signature()));
        }
        Ok(*self * *rhs)
    }

    /// Scalar part of the square of the grade-k projection (k in {1, 2}):
    /// a·a for the vector part, A·A for the bivector part. Signature-dependent.
    pub fn quadratic_scalar(&self, k: usize) -> Result<f64> {
        if k != 1 && k != 2 {
            return Err(Error::InvalidGrade {
                grade: k,
                allowed: "{1,2}",
            });
        }
        let g = self.grade(k).expect("k validated");
        Ok((g * g).coeff(0))
    }

    /// The scalar I(a ∧ A) = s·I², where s = a1·a23 - a2·a13 + a3·a12 is the
    /// e123 coefficient of the wedge of the vector and bivector parts.
    pub fn wedge_mix_scalar(&self) -> f64 {
        let c = self.coeffs();
        let s = c[1] * c[6] - c[2] * c[5] + c[3] * c[4];
        s * self.signature().pseudoscalar_square()
    }

    /// e123 coefficient of the wedge of the vector and bivector parts
    /// (the quantity the pseudoscalar square is folded into by
    /// [`wedge_mix_scalar`](Self::wedge_mix_scalar)).
    pub fn wedge_coefficient(&self) -> f64 {
        let c = self.coeffs();
        c[1] * c[6] - c[2] * c[5] + c[3] * c[4]
    }

    /// Determinant: the scalar value of A·conj(A)·gradeInv(A)·rev(A).
    /// The non-scalar grades of that product vanish identically in these
    /// algebras.
    pub fn determinant(&self) -> f64 {
        self.adjugate_product().coeff(0)
    }

    fn adjugate(&self) -> Multivector {
        self.clifford_conjugate() * self.grade_involution() * self.reverse()
    }

    fn adjugate_product(&self) -> Multivector {
        *self * self.adjugate()
    }

    /// Two-sided inverse, conj(A)·gradeInv(A)·rev(A) / det(A).
    ///
    /// Fails when |det| falls below `DET_RELATIVE_EPS` times the fourth power
    /// of the largest coefficient (a scale-invariant zero test).
    pub fn inverse(&self) -> Result<Multivector> {
        let det = self.determinant();
        let scale = self.max_abs();
        let threshold = (DET_RELATIVE_EPS * scale.powi(4)).max(ABS_FLOOR);
        if det.abs() <= threshold {
            return Err(Error::Singular { det, threshold });
        }
        Ok(self.adjugate() * (1.0 / det))
    }
}

impl std::ops::Mul for Multivector {
    type Output = Multivector;

    /// Geometric product. Panics on signature mismatch; use
    /// [`Multivector::geometric_product`] for a checked variant.
    fn mul(self, rhs: Multivector) -> Multivector {
        assert_eq!(
            self.signature(),
            rhs.signature(),
            "geometric product of mismatched signatures"
        );
        let c = gp_unchecked(self.signature(), self.coeffs(), rhs.coeffs());
        Multivector::from_coeffs_unchecked(self.signature(), c)
    }
}
