//! Minimal fixed-point big-float arithmetic for reference values.
//!
//! Values are `m / 2^BITS` with `m` a `BigInt`; 384 fraction bits give about
//! 115 decimal digits, far beyond the 30 significant digits the golden
//! comparisons call for. Elementary functions are plain Taylor sums, which is
//! fine for the argument ranges that occur here (|x| < 20 costs ~27 bits of
//! headroom at the series peak).
//!
//! Entirely independent of the crate under test: only `num-bigint`.

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub const BITS: u32 = 384;

#[derive(Clone, Debug, PartialEq)]
pub struct Hp(BigInt);

impl Hp {
    pub fn zero() -> Hp {
        Hp(BigInt::zero())
    }

    pub fn one() -> Hp {
        Hp::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Hp {
        Hp(BigInt::from(n) << BITS)
    }

    /// Exact embedding of an f64 (mantissa and exponent, no rounding unless
    /// the value is below 2^-384).
    pub fn from_f64(x: f64) -> Hp {
        assert!(x.is_finite());
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, e) = if biased == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        let m = BigInt::from(mant) * sign;
        let shift = e + i64::from(BITS);
        if shift >= 0 {
            Hp(m << (shift as u32))
        } else {
            Hp(m >> ((-shift) as u32))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("finite") * (2.0f64).powi(-(BITS as i32))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(&self) -> Hp {
        Hp(self.0.abs())
    }

    pub fn mul(&self, rhs: &Hp) -> Hp {
        Hp((&self.0 * &rhs.0) >> BITS)
    }

    pub fn div(&self, rhs: &Hp) -> Hp {
        assert!(!rhs.0.is_zero(), "division by zero");
        Hp((&self.0 << BITS) / &rhs.0)
    }

    pub fn div_int(&self, n: i64) -> Hp {
        Hp(&self.0 / BigInt::from(n))
    }

    pub fn scale_i64(&self, n: i64) -> Hp {
        Hp(&self.0 * BigInt::from(n))
    }

    pub fn sqrt(&self) -> Hp {
        assert!(self.0 >= BigInt::zero(), "sqrt of negative");
        Hp((&self.0 << BITS).sqrt())
    }

    pub fn exp(&self) -> Hp {
        let mut sum = Hp::one();
        let mut term = Hp::one();
        for k in 1..2000i64 {
            term = term.mul(self).div_int(k);
            if term.is_zero() {
                return sum;
            }
            sum = sum + term.clone();
        }
        panic!("exp series did not terminate");
    }

    pub fn cos(&self) -> Hp {
        self.even_series(true)
    }

    pub fn cosh(&self) -> Hp {
        self.even_series(false)
    }

    pub fn sin(&self) -> Hp {
        self.odd_series(true)
    }

    pub fn sinh(&self) -> Hp {
        self.odd_series(false)
    }

    fn even_series(&self, alternating: bool) -> Hp {
        let x2 = self.mul(self);
        let mut sum = Hp::one();
        let mut term = Hp::one();
        for k in 1..2000i64 {
            term = term.mul(&x2).div_int((2 * k - 1) * (2 * k));
            if alternating {
                term = -term;
            }
            if term.is_zero() {
                return sum;
            }
            sum = sum + term.clone();
        }
        panic!("series did not terminate");
    }

    fn odd_series(&self, alternating: bool) -> Hp {
        let x2 = self.mul(self);
        let mut sum = self.clone();
        let mut term = self.clone();
        for k in 1..2000i64 {
            term = term.mul(&x2).div_int((2 * k) * (2 * k + 1));
            if alternating {
                term = -term;
            }
            if term.is_zero() {
                return sum;
            }
            sum = sum + term.clone();
        }
        panic!("series did not terminate");
    }
}

impl Add for Hp {
    type Output = Hp;
    fn add(self, rhs: Hp) -> Hp {
        Hp(self.0 + rhs.0)
    }
}

impl Sub for Hp {
    type Output = Hp;
    fn sub(self, rhs: Hp) -> Hp {
        Hp(self.0 - rhs.0)
    }
}

impl Neg for Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        Hp(-self.0)
    }
}
