//! Text and machine renderings of command results.

use num::{BigInt, BigRational, Signed};
use serde::Serialize;

use crate::quasimorphisms::HomogenisationEstimate;
use crate::verify::{CampaignReport, CommutatorWitness, REPORT_SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputMode {
    Text,
    Machine,
}

/// Decimal with at most `digits` fractional digits, rounded down (or up).
pub fn decimal(r: &BigRational, round_up: bool, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let n = if round_up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let digits_str = format!("{:0>width$}", n.abs(), width = digits as usize + 1);
    let (int, frac) = digits_str.split_at(digits_str.len() - digits as usize);
    let frac = frac.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// `[lower, upper]` rounded outwards.
pub fn interval(h: &HomogenisationEstimate) -> String {
    format!("[{}, {}]", decimal(&h.lower(), false, 6), decimal(&h.upper(), true, 6))
}

/// Certified homogenisation line, e.g. `f̄(w) ∈ [0.99, 1.01] (N=3000, D≤30)`.
pub fn homogenisation_line(h: &HomogenisationEstimate, defect: &BigRational) -> String {
    format!("f̄(w) ∈ {} (N={}, D≤{})", interval(h), h.power, defect)
}

pub fn campaign_text(r: &CampaignReport) -> String {
    let mut s = String::new();
    s.push_str(&format!("check: {}\n", r.check));
    s.push_str(&format!("subject: {}\n", r.subject));
    s.push_str(&format!("trials: {}\n", r.trials));
    s.push_str(&format!("max observed: {}\n", r.max_observed));
    s.push_str(&format!("bound: {}\n", r.bound));
    s.push_str(&format!("violations: {}\n", r.violation_count));
    for v in &r.violations {
        let values = v.values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        s.push_str(&format!("  trial {}: inputs [{}] values [{}] deviation {}\n", v.trial, v.inputs.join(" | "), values, v.deviation));
    }
    s.push_str(&format!("seed: {}\n", r.seed));
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let rel = if r.passed() { "≤" } else { ">" };
    s.push_str(&format!("result: {verdict} (max observed {} {rel} {})\n", r.max_observed, r.bound));
    s
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    schema: &'a str,
    verb: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Machine document for a verb whose result is `body`.
pub fn machine<T: Serialize>(verb: &str, body: &T) -> String {
    toml::to_string(&Document { schema: REPORT_SCHEMA, verb, body }).expect("report serializes")
}

#[derive(Serialize)]
pub struct HomogenisationDoc {
    pub qm: String,
    pub word: String,
    pub power: u64,
    pub value: String,
    pub error_bound: String,
    pub lower: String,
    pub upper: String,
    pub defect: String,
}

impl HomogenisationDoc {
    pub fn new(qm: String, word: String, h: &HomogenisationEstimate, defect: &BigRational) -> Self {
        HomogenisationDoc {
            qm,
            word,
            power: h.power,
            value: h.value.to_string(),
            error_bound: h.error_bound.to_string(),
            lower: h.lower().to_string(),
            upper: h.upper().to_string(),
            defect: defect.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct SclDoc {
    pub word: String,
    pub qm: String,
    pub z: String,
    pub case: String,
    pub derivation: Vec<String>,
    pub homogenisation: HomogenisationDoc,
    pub scl_lower_bound: String,
}

impl SclDoc {
    pub fn new(w: &CommutatorWitness, h: &HomogenisationEstimate, defect: &BigRational, bound: &BigRational) -> Self {
        SclDoc {
            word: w.word.to_string(),
            qm: w.qm.to_string(),
            z: w.z.to_string(),
            case: if w.isomorphic { "isomorphic-factors" } else { "distinct-factors" }.into(),
            derivation: w.derivation_log(),
            homogenisation: HomogenisationDoc::new(w.qm.to_string(), w.word.to_string(), h, defect),
            scl_lower_bound: bound.to_string(),
        }
    }

    pub fn text(&self, h: &HomogenisationEstimate, defect: &BigRational) -> String {
        let mut s = String::new();
        s.push_str(&format!("case: {}\n", self.case));
        s.push_str(&format!("w = {}\n", self.word));
        s.push_str("w ∈ [Aut(G),G]:\n");
        for line in &self.derivation {
            s.push_str(&format!("  {line}\n"));
        }
        s.push_str(&format!("z = code(w) = {} (generic)\n", self.z));
        s.push_str(&format!("qm: {}\n", self.qm));
        s.push_str(&format!("{}\n", homogenisation_line(h, defect)));
        s.push_str(&format!("  exact: [{}, {}]\n", h.lower(), h.upper()));
        s.push_str(&format!("scl_Aut(w) ≥ {}\n", self.scl_lower_bound));
        s
    }
}
