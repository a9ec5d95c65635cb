//! Independent blade-product oracle and a high-precision multivector on top.
//!
//! The oracle multiplies blades the long way: concatenate the basis-vector
//! factor lists, bubble-sort to ascending order flipping the sign per swap,
//! then cancel adjacent equal factors through the basis square. It shares
//! nothing with the bitmask table generator in the crate under test.

use gaexp::Signature;

use super::hpfloat::Hp;

/// Factor list of each blade in storage order (1-based basis indices).
pub const BLADE_FACTORS: [&[u32]; 8] =
    [&[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]];

fn blade_index_of(factors: &[u32]) -> usize {
    BLADE_FACTORS
        .iter()
        .position(|f| *f == factors)
        .expect("reduced factor list is a known blade")
}

/// (sign, blade index) of blade_i * blade_j by symbolic reduction.
pub fn symbolic_blade_product(sig: Signature, i: usize, j: usize) -> (f64, usize) {
    let mut factors: Vec<u32> = BLADE_FACTORS[i]
        .iter()
        .chain(BLADE_FACTORS[j].iter())
        .copied()
        .collect();
    let mut sign = 1.0;
    // bubble sort, one sign flip per transposition of distinct factors
    let mut swapped = true;
    while swapped {
        swapped = false;
        for k in 0..factors.len().saturating_sub(1) {
            if factors[k] > factors[k + 1] {
                factors.swap(k, k + 1);
                sign = -sign;
                swapped = true;
            }
        }
    }
    // cancel equal neighbours via the metric
    let mut reduced: Vec<u32> = Vec::new();
    let mut k = 0;
    while k < factors.len() {
        if k + 1 < factors.len() && factors[k] == factors[k + 1] {
            sign *= sig.basis_square(factors[k]);
            k += 2;
        } else {
            reduced.push(factors[k]);
            k += 1;
        }
    }
    (sign, blade_index_of(&reduced))
}

/// Geometric product of f64 coefficient arrays through the symbolic oracle.
pub fn gp_oracle(sig: Signature, a: &[f64; 8], b: &[f64; 8]) -> [f64; 8] {
    let mut out = [0.0f64; 8];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0.0 {
                continue;
            }
            let (sign, idx) = symbolic_blade_product(sig, i, j);
            out[idx] += sign * ai * bj;
        }
    }
    out
}

/// High-precision multivector: eight `Hp` coefficients plus the algebra tag.
#[derive(Clone, Debug)]
pub struct HpMv {
    pub sig: Signature,
    pub c: [Hp; 8],
}

impl HpMv {
    pub fn zero(sig: Signature) -> HpMv {
        HpMv {
            sig,
            c: std::array::from_fn(|_| Hp::zero()),
        }
    }

    pub fn scalar(sig: Signature, v: Hp) -> HpMv {
        let mut out = HpMv::zero(sig);
        out.c[0] = v;
        out
    }

    pub fn one(sig: Signature) -> HpMv {
        HpMv::scalar(sig, Hp::one())
    }

    pub fn pseudoscalar(sig: Signature) -> HpMv {
        let mut out = HpMv::zero(sig);
        out.c[7] = Hp::one();
        out
    }

    pub fn from_i64(sig: Signature, c: [i64; 8]) -> HpMv {
        HpMv {
            sig,
            c: std::array::from_fn(|i| Hp::from_i64(c[i])),
        }
    }

    /// Grade 1 + grade 2 part.
    pub fn vector_bivector(&self) -> HpMv {
        let mut out = HpMv::zero(self.sig);
        for i in 1..7 {
            out.c[i] = self.c[i].clone();
        }
        out
    }

    pub fn add(&self, rhs: &HpMv) -> HpMv {
        assert_eq!(self.sig, rhs.sig);
        HpMv {
            sig: self.sig,
            c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()),
        }
    }

    pub fn sub(&self, rhs: &HpMv) -> HpMv {
        assert_eq!(self.sig, rhs.sig);
        HpMv {
            sig: self.sig,
            c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()),
        }
    }

    pub fn scale(&self, f: &Hp) -> HpMv {
        HpMv {
            sig: self.sig,
            c: std::array::from_fn(|i| self.c[i].mul(f)),
        }
    }

    /// Geometric product through the symbolic oracle table.
    pub fn gp(&self, rhs: &HpMv) -> HpMv {
        assert_eq!(self.sig, rhs.sig);
        let mut out = HpMv::zero(self.sig);
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let (sign, idx) = symbolic_blade_product(self.sig, i, j);
                let prod = self.c[i].mul(&rhs.c[j]);
                out.c[idx] = out.c[idx].clone() + if sign < 0.0 { -prod } else { prod };
            }
        }
        out
    }

    pub fn to_f64(&self) -> [f64; 8] {
        std::array::from_fn(|i| self.c[i].to_f64())
    }
}
