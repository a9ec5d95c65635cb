//! The seven worked exponential cases with their displayed closed-form
//! answers evaluated in high-precision arithmetic.

use gaexp::Signature::{self, Cl03, Cl12, Cl21, Cl30};

use super::hpfloat::Hp;
use super::oracle::HpMv;

pub struct Example {
    pub name: &'static str,
    pub algebra: Signature,
    pub input: [f64; 8],
    /// Pinned mixing data, where the case states it.
    pub squares: Option<(f64, f64)>,
    pub reference: fn() -> HpMv,
}

/// -8 - 6 e2 - 9 e3 + 5 e12 - 5 e13 + 6 e23 - 4 e123 (examples 1, 2 and 4).
pub const SHARED_INPUT: [i64; 8] = [-8, 0, -6, -9, 5, -5, 6, -4];

fn fi(c: [i64; 8]) -> [f64; 8] {
    std::array::from_fn(|i| c[i] as f64)
}

fn sqrt_i(n: i64) -> Hp {
    Hp::from_i64(n).sqrt()
}

fn exp_i(n: i64) -> Hp {
    Hp::from_i64(n).exp()
}

/// (e^-8 / 2) [ e^4 (1 - I)(cos sqrt53 + sin sqrt53 / sqrt53 X)
///            + e^-4 (1 + I)(cos sqrt353 + sin sqrt353 / sqrt353 X) ]
fn example1() -> HpMv {
    let sig = Cl03;
    let x = HpMv::from_i64(sig, SHARED_INPUT).vector_bivector();
    let one = HpMv::one(sig);
    let i = HpMv::pseudoscalar(sig);
    let r53 = sqrt_i(53);
    let r353 = sqrt_i(353);
    let lo = one
        .sub(&i)
        .gp(&HpMv::scalar(sig, r53.cos()).add(&x.scale(&r53.sin().div(&r53))))
        .scale(&exp_i(4));
    let hi = one
        .add(&i)
        .gp(&HpMv::scalar(sig, r353.cos()).add(&x.scale(&r353.sin().div(&r353))))
        .scale(&exp_i(-4));
    lo.add(&hi).scale(&exp_i(-8).div_int(2))
}

/// e^-8 (cos 4 - sin 4 I) [ cos|a-| cosh a+ - sin|a-| sinh a+ I +
/// (1/sqrt23461)(-|a-| X + a+ X I)(-sin|a-| cosh a+ - cos|a-| sinh a+ I) ]
/// where |a-| = 75 sqrt(2/(31+sqrt23461)) and a+ = sqrt((31+sqrt23461)/2).
fn example2() -> HpMv {
    let sig = Cl30;
    let x = HpMv::from_i64(sig, SHARED_INPUT).vector_bivector();
    let i = HpMv::pseudoscalar(sig);
    let root = sqrt_i(23461);
    let base = Hp::from_i64(31) + root.clone();
    let amag = Hp::from_i64(75).mul(&Hp::from_i64(2).div(&base).sqrt());
    let ap = base.div_int(2).sqrt();
    let four = Hp::from_i64(4);
    let lead = HpMv::scalar(sig, four.cos())
        .sub(&i.scale(&four.sin()))
        .scale(&exp_i(-8));
    let f =
        HpMv::scalar(sig, amag.cos().mul(&ap.cosh())).sub(&i.scale(&amag.sin().mul(&ap.sinh())));
    let bracket = x.scale(&-amag.clone()).add(&x.gp(&i).scale(&ap));
    let factor =
        HpMv::scalar(sig, -(amag.sin().mul(&ap.cosh()))).sub(&i.scale(&amag.cos().mul(&ap.sinh())));
    let tail = bracket.gp(&factor).scale(&Hp::one().div(&root));
    lead.gp(&f.add(&tail))
}

/// e^3 (cosh sqrt5 + (-e1 + 2 e12) sinh sqrt5 / sqrt5)
fn example3() -> HpMv {
    let sig = Cl12;
    let x = HpMv::from_i64(sig, [3, -1, 0, 0, 2, 0, 0, 0]).vector_bivector();
    let r5 = sqrt_i(5);
    HpMv::scalar(sig, r5.cosh())
        .add(&x.scale(&r5.sinh().div(&r5)))
        .scale(&exp_i(3))
}

/// (1/(2 e^8)) [ e^-4 (1 + I)(sin sqrt159 / sqrt159 X + cos sqrt159)
///             + e^4 (1 - I)(sinh sqrt141 / sqrt141 X + cosh sqrt141) ]
fn example4() -> HpMv {
    let sig = Cl21;
    let x = HpMv::from_i64(sig, SHARED_INPUT).vector_bivector();
    let one = HpMv::one(sig);
    let i = HpMv::pseudoscalar(sig);
    let r159 = sqrt_i(159);
    let r141 = sqrt_i(141);
    let trig = one
        .add(&i)
        .gp(&HpMv::scalar(sig, r159.cos()).add(&x.scale(&r159.sin().div(&r159))))
        .scale(&exp_i(-4));
    let hyp = one
        .sub(&i)
        .gp(&HpMv::scalar(sig, r141.cosh()).add(&x.scale(&r141.sinh().div(&r141))))
        .scale(&exp_i(4));
    trig.add(&hyp).scale(&exp_i(-8).div_int(2))
}

/// (1/2) (e (1 + I) + e^-1 (1 - I)) (sinh sqrt11 / sqrt11 X + cosh sqrt11)
fn example5() -> HpMv {
    let sig = Cl21;
    let x = HpMv::from_i64(sig, [0, 0, -6, 0, 5, 0, 0, 1]).vector_bivector();
    let one = HpMv::one(sig);
    let i = HpMv::pseudoscalar(sig);
    let r11 = sqrt_i(11);
    let lead = one
        .add(&i)
        .scale(&exp_i(1))
        .add(&one.sub(&i).scale(&exp_i(-1)));
    lead.gp(&HpMv::scalar(sig, r11.cosh()).add(&x.scale(&r11.sinh().div(&r11))))
        .scale(&Hp::one().div_int(2))
}

/// (e^2/2) [ e^3 (1 + I)(sin 5 / 5 X + cos 5) + e^-3 (1 - I)(sin 7 / 7 X + cos 7) ]
fn example6() -> HpMv {
    let sig = Cl21;
    let x = HpMv::from_i64(sig, [2, 0, 0, 1, 6, 0, 0, 3]).vector_bivector();
    let one = HpMv::one(sig);
    let i = HpMv::pseudoscalar(sig);
    let five = Hp::from_i64(5);
    let seven = Hp::from_i64(7);
    let hi = one
        .add(&i)
        .gp(&HpMv::scalar(sig, five.cos()).add(&x.scale(&five.sin().div(&five))))
        .scale(&exp_i(3));
    let lo = one
        .sub(&i)
        .gp(&HpMv::scalar(sig, seven.cos()).add(&x.scale(&seven.sin().div(&seven))))
        .scale(&exp_i(-3));
    hi.add(&lo).scale(&exp_i(2).div_int(2))
}

/// (e^2/2) [ e (1 + I)(sinh 3sqrt5 / 3sqrt5 X + cosh 3sqrt5)
///         + e^-1 (1 - I)(sin sqrt35 / sqrt35 X + cos sqrt35) ]
fn example7() -> HpMv {
    let sig = Cl21;
    let x = HpMv::from_i64(sig, [2, 0, -10, -10, 0, 2, 1, 1]).vector_bivector();
    let one = HpMv::one(sig);
    let i = HpMv::pseudoscalar(sig);
    let rh = sqrt_i(45);
    let rt = sqrt_i(35);
    let hyp = one
        .add(&i)
        .gp(&HpMv::scalar(sig, rh.cosh()).add(&x.scale(&rh.sinh().div(&rh))))
        .scale(&exp_i(1));
    let trig = one
        .sub(&i)
        .gp(&HpMv::scalar(sig, rt.cos()).add(&x.scale(&rt.sin().div(&rt))))
        .scale(&exp_i(-1));
    hyp.add(&trig).scale(&exp_i(2).div_int(2))
}

pub fn examples() -> Vec<Example> {
    vec![
        Example {
            name: "example 1",
            algebra: Cl03,
            input: fi(SHARED_INPUT),
            squares: Some((53.0, 353.0)),
            reference: example1,
        },
        Example {
            name: "example 2",
            algebra: Cl30,
            input: fi(SHARED_INPUT),
            squares: None,
            reference: example2,
        },
        Example {
            name: "example 3",
            algebra: Cl12,
            input: fi([3, -1, 0, 0, 2, 0, 0, 0]),
            squares: None,
            reference: example3,
        },
        Example {
            name: "example 4",
            algebra: Cl21,
            input: fi(SHARED_INPUT),
            squares: Some((-141.0, 159.0)),
            reference: example4,
        },
        Example {
            name: "example 5",
            algebra: Cl21,
            input: fi([0, 0, -6, 0, 5, 0, 0, 1]),
            squares: Some((-11.0, -11.0)),
            reference: example5,
        },
        Example {
            name: "example 6",
            algebra: Cl21,
            input: fi([2, 0, 0, 1, 6, 0, 0, 3]),
            squares: Some((49.0, 25.0)),
            reference: example6,
        },
        Example {
            name: "example 7",
            algebra: Cl21,
            input: fi([2, 0, -10, -10, 0, 2, 1, 1]),
            squares: Some((35.0, -45.0)),
            reference: example7,
        },
    ]
}
