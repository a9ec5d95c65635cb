//! Output records and their JSON / text renderings.
//!
//! JSON is written by hand so that key order is fixed and every float is
//! serialized with 17 significant digits (bit-exact round trips). The shapes
//! are published in `schema/exp_record.schema.json` and
//! `schema/ode_record.schema.json` at the repository root.

use gaexp::{Branch, MixingScalars, Multivector, SeriesStats, Signature};

use crate::parse::format_multivector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Closed,
    Series,
    Both,
}

impl Engine {
    pub fn label(self) -> &'static str {
        match self {
            Engine::Closed => "closed",
            Engine::Series => "series",
            Engine::Both => "both",
        }
    }
}

/// One evaluation result: input, result, and how it was produced.
pub struct OutputRecord {
    pub algebra: Signature,
    pub input: [f64; 8],
    pub result: [f64; 8],
    pub mixing: Option<MixingScalars>,
    pub branch: Option<(Branch, Branch)>,
    pub engine: Engine,
    pub series: Option<SeriesStats>,
    pub max_discrepancy: Option<f64>,
}

/// 17-significant-digit JSON number.
pub fn json_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

fn json_coeffs(c: &[f64; 8]) -> String {
    let items: Vec<String> = c.iter().map(|&x| json_f64(x)).collect();
    format!("[{}]", items.join(","))
}

fn json_opt_f64(v: Option<f64>) -> String {
    v.map_or_else(|| "null".to_string(), json_f64)
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        let mut s = String::with_capacity(512);
        s.push_str(&format!(
            "{{\"algebra\":[{},{}]",
            self.algebra.p(),
            self.algebra.q()
        ));
        s.push_str(&format!(",\"input\":{}", json_coeffs(&self.input)));
        s.push_str(&format!(",\"result\":{}", json_coeffs(&self.result)));
        match &self.mixing {
            Some(m) => s.push_str(&format!(
                ",\"mixing\":{{\"a_plus_sq\":{},\"a_minus_sq\":{},\"a_plus\":{},\"a_minus\":{}}}",
                json_f64(m.a_plus_sq),
                json_f64(m.a_minus_sq),
                json_opt_f64(m.a_plus),
                json_opt_f64(m.a_minus),
            )),
            None => s.push_str(",\"mixing\":null"),
        }
        match &self.branch {
            Some((p, m)) => s.push_str(&format!(
                ",\"branch\":{{\"plus\":\"{}\",\"minus\":\"{}\"}}",
                p.label(),
                m.label()
            )),
            None => s.push_str(",\"branch\":null"),
        }
        s.push_str(&format!(",\"engine\":\"{}\"", self.engine.label()));
        match &self.series {
            Some(st) => s.push_str(&format!(
                ",\"series\":{{\"terms\":{},\"scaling_exponent\":{}}}",
                st.terms_used, st.scaling_exponent
            )),
            None => s.push_str(",\"series\":null"),
        }
        s.push_str(&format!(
            ",\"max_discrepancy\":{}",
            json_opt_f64(self.max_discrepancy)
        ));
        s.push('}');
        s
    }

    pub fn to_text(&self) -> String {
        let sig = self.algebra;
        let input = Multivector::new(sig, self.input).expect("validated");
        let result = Multivector::new(sig, self.result).expect("finite results only");
        let mut s = String::new();
        s.push_str(&format!("algebra: {}\n", sig));
        s.push_str(&format!("input:   {}\n", format_multivector(&input)));
        s.push_str(&format!("result:  {}\n", format_multivector(&result)));
        if let Some(m) = &self.mixing {
            s.push_str(&format!(
                "mixing:  a+^2 = {}  a-^2 = {}",
                json_f64(m.a_plus_sq),
                json_f64(m.a_minus_sq)
            ));
            if let (Some(ap), Some(am)) = (m.a_plus, m.a_minus) {
                s.push_str(&format!("  (a+ = {}, a- = {})", json_f64(ap), json_f64(am)));
            }
            s.push('\n');
        }
        if let Some((p, m)) = &self.branch {
            s.push_str(&format!(
                "branch:  plus={} minus={}\n",
                p.label(),
                m.label()
            ));
        }
        s.push_str(&format!("engine:  {}\n", self.engine.label()));
        if let Some(st) = &self.series {
            s.push_str(&format!(
                "series:  terms={} scaling_exponent={}\n",
                st.terms_used, st.scaling_exponent
            ));
        }
        if let Some(d) = self.max_discrepancy {
            s.push_str(&format!("discrepancy: {:e}\n", d));
        }
        s
    }
}

/// One ODE sample point.
pub struct OdeRecord {
    pub algebra: Signature,
    pub t: f64,
    pub coefficients: [f64; 8],
}

impl OdeRecord {
    pub fn to_json(&self) -> String {
        format!(
            "{{\"algebra\":[{},{}],\"t\":{},\"coefficients\":{}}}",
            self.algebra.p(),
            self.algebra.q(),
            json_f64(self.t),
            json_coeffs(&self.coefficients)
        )
    }

    pub fn to_text(&self) -> String {
        let mv = Multivector::new(self.algebra, self.coefficients).expect("finite");
        format!(
            "t = {:<22}  X = {}",
            json_f64(self.t),
            format_multivector(&mv)
        )
    }
}
