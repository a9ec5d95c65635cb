//! Built-in self test: the seven worked exponential cases with exact
//! closed-form reference values, checked against both engines.

use gaexp::Signature::{self, Cl03, Cl12, Cl21, Cl30};
use gaexp::{exp_closed, exp_series_scaled, mixing_cl03, mixing_cl21, Multivector, SeriesConfig};

pub struct GoldenCase {
    pub name: &'static str,
    pub algebra: Signature,
    pub input: [f64; 8],
    /// Signed squares (a₋², a₊²) where the case pins them.
    pub squares: Option<(f64, f64)>,
    pub reference: fn() -> Multivector,
}

// -8 - 6 e2 - 9 e3 + 5 e12 - 5 e13 + 6 e23 - 4 e123, read in three algebras.
const SHARED: [f64; 8] = [-8.0, 0.0, -6.0, -9.0, 5.0, -5.0, 6.0, -4.0];

fn x_of(sig: Signature, c: [f64; 8]) -> Multivector {
    Multivector::new(sig, c).unwrap().vector_bivector()
}

fn sc(sig: Signature, v: f64) -> Multivector {
    Multivector::scalar(sig, v)
}

fn ps(sig: Signature) -> Multivector {
    Multivector::pseudoscalar(sig, 1.0)
}

fn case1_reference() -> Multivector {
    let sig = Cl03;
    let x = x_of(sig, SHARED);
    let one = Multivector::one(sig);
    let i = ps(sig);
    let r53 = 53.0f64.sqrt();
    let r353 = 353.0f64.sqrt();
    ((one - i) * (sc(sig, r53.cos()) + x * (r53.sin() / r53)) * 4.0f64.exp()
        + (one + i) * (sc(sig, r353.cos()) + x * (r353.sin() / r353)) * (-4.0f64).exp())
        * (0.5 * (-8.0f64).exp())
}

fn case2_reference() -> Multivector {
    let sig = Cl30;
    let x = x_of(sig, SHARED);
    let i = ps(sig);
    let root = 23461.0f64.sqrt();
    let amag = 75.0 * (2.0 / (31.0 + root)).sqrt();
    let ap = ((31.0 + root) / 2.0).sqrt();
    let lead = (sc(sig, 4.0f64.cos()) - i * 4.0f64.sin()) * (-8.0f64).exp();
    let f = sc(sig, amag.cos() * ap.cosh()) - i * (amag.sin() * ap.sinh());
    let tail = (x * (-amag) + x * i * ap)
        * (sc(sig, -amag.sin() * ap.cosh()) - i * (amag.cos() * ap.sinh()))
        * (1.0 / root);
    lead * (f + tail)
}

fn case3_reference() -> Multivector {
    let sig = Cl12;
    let x = x_of(sig, [3.0, -1.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0]);
    let r5 = 5.0f64.sqrt();
    (sc(sig, r5.cosh()) + x * (r5.sinh() / r5)) * 3.0f64.exp()
}

fn case4_reference() -> Multivector {
    let sig = Cl21;
    let x = x_of(sig, SHARED);
    let one = Multivector::one(sig);
    let i = ps(sig);
    let r159 = 159.0f64.sqrt();
    let r141 = 141.0f64.sqrt();
    ((one + i) * (sc(sig, r159.cos()) + x * (r159.sin() / r159)) * (-4.0f64).exp()
        + (one - i) * (sc(sig, r141.cosh()) + x * (r141.sinh() / r141)) * 4.0f64.exp())
        * (0.5 * (-8.0f64).exp())
}

fn case5_reference() -> Multivector {
    let sig = Cl21;
    let input = [0.0, 0.0, -6.0, 0.0, 5.0, 0.0, 0.0, 1.0];
    let x = x_of(sig, input);
    let one = Multivector::one(sig);
    let i = ps(sig);
    let r11 = 11.0f64.sqrt();
    ((one + i) * 1.0f64.exp() + (one - i) * (-1.0f64).exp())
        * (sc(sig, r11.cosh()) + x * (r11.sinh() / r11))
        * 0.5
}

fn case6_reference() -> Multivector {
    let sig = Cl21;
    let input = [2.0, 0.0, 0.0, 1.0, 6.0, 0.0, 0.0, 3.0];
    let x = x_of(sig, input);
    let one = Multivector::one(sig);
    let i = ps(sig);
    ((one + i) * (sc(sig, 5.0f64.cos()) + x * (5.0f64.sin() / 5.0)) * 3.0f64.exp()
        + (one - i) * (sc(sig, 7.0f64.cos()) + x * (7.0f64.sin() / 7.0)) * (-3.0f64).exp())
        * (0.5 * 2.0f64.exp())
}

fn case7_reference() -> Multivector {
    let sig = Cl21;
    let input = [2.0, 0.0, -10.0, -10.0, 0.0, 2.0, 1.0, 1.0];
    let x = x_of(sig, input);
    let one = Multivector::one(sig);
    let i = ps(sig);
    let rh = 45.0f64.sqrt();
    let rt = 35.0f64.sqrt();
    ((one + i) * (sc(sig, rh.cosh()) + x * (rh.sinh() / rh)) * 1.0f64.exp()
        + (one - i) * (sc(sig, rt.cos()) + x * (rt.sin() / rt)) * (-1.0f64).exp())
        * (0.5 * 2.0f64.exp())
}

pub fn golden_cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            name: "example 1 (Cl(0,3), general multivector)",
            algebra: Cl03,
            input: SHARED,
            squares: Some((53.0, 353.0)),
            reference: case1_reference,
        },
        GoldenCase {
            name: "example 2 (Cl(3,0), general multivector)",
            algebra: Cl30,
            input: SHARED,
            squares: None,
            reference: case2_reference,
        },
        GoldenCase {
            name: "example 3 (Cl(1,2), disentangled)",
            algebra: Cl12,
            input: [3.0, -1.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0],
            squares: None,
            reference: case3_reference,
        },
        GoldenCase {
            name: "example 4 (Cl(2,1), trig/hyperbolic)",
            algebra: Cl21,
            input: SHARED,
            squares: Some((-141.0, 159.0)),
            reference: case4_reference,
        },
        GoldenCase {
            name: "example 5 (Cl(2,1), hyperbolic/hyperbolic)",
            algebra: Cl21,
            input: [0.0, 0.0, -6.0, 0.0, 5.0, 0.0, 0.0, 1.0],
            squares: Some((-11.0, -11.0)),
            reference: case5_reference,
        },
        GoldenCase {
            name: "example 6 (Cl(2,1), trig/trig)",
            algebra: Cl21,
            input: [2.0, 0.0, 0.0, 1.0, 6.0, 0.0, 0.0, 3.0],
            squares: Some((49.0, 25.0)),
            reference: case6_reference,
        },
        GoldenCase {
            name: "example 7 (Cl(2,1), mixed)",
            algebra: Cl21,
            input: [2.0, 0.0, -10.0, -10.0, 0.0, 2.0, 1.0, 1.0],
            squares: Some((35.0, -45.0)),
            reference: case7_reference,
        },
    ]
}

/// Runs the golden suite; prints one line per case; returns failure count.
pub fn run_selftest() -> usize {
    let mut failures = 0;
    for case in golden_cases() {
        let a = Multivector::new(case.algebra, case.input).unwrap();
        let mut problems: Vec<String> = Vec::new();

        let closed = exp_closed(&a).unwrap();
        let reference = (case.reference)();
        let scale = reference.max_abs();
        let d_ref = closed.max_abs_diff(&reference);
        if d_ref > 1e-12 * scale {
            problems.push(format!("closed vs reference {d_ref:e}"));
        }

        let series = exp_series_scaled(&a, &SeriesConfig::default()).unwrap();
        let d_series = closed.max_abs_diff(&series);
        if d_series > 1e-10 * scale.max(1.0) {
            problems.push(format!("closed vs series {d_series:e}"));
        }

        if let Some((am2, ap2)) = case.squares {
            let m = match case.algebra {
                Cl03 => mixing_cl03(&a).unwrap(),
                Cl21 => mixing_cl21(&a).unwrap(),
                _ => unreachable!("squares pinned only for split-formula cases"),
            };
            if (m.a_minus_sq - am2).abs() > 1e-12 || (m.a_plus_sq - ap2).abs() > 1e-12 {
                problems.push(format!(
                    "mixing squares ({}, {}) != ({am2}, {ap2})",
                    m.a_minus_sq, m.a_plus_sq
                ));
            }
        }

        if problems.is_empty() {
            println!("{}: PASS", case.name);
        } else {
            failures += 1;
            println!("{}: FAIL ({})", case.name, problems.join("; "));
        }
    }
    failures
}
