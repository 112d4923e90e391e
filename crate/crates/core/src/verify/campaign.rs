//! Randomized defect and invariance campaigns.
//!
//! Sampling only ever finds lower bounds on a defect or a deviation; a
//! campaign checks those against a known bound and records every trial
//! that exceeds it as a reproducible counterexample.

use std::sync::Arc;

use num::{BigRational, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automorphisms::{apply_gen, random_automorphism_with, GenKind};
use crate::codes::{self, Pattern};
use crate::error::{Error, Result};
use crate::factors::GroupConfig;
use crate::quasimorphisms::{a_priori_defect, evaluate, CodeKind, QmSpec, THETA_SUBADDITIVITY_BOUND};
use crate::verify::sample::{campaign_word, trial_rng, PaletteSampler, DEFAULT_RADIUS};
use crate::words::ReducedWord;

pub const DEFAULT_DEFECT_TRIALS: u64 = 10_000;
pub const DEFAULT_INVARIANCE_TRIALS: u64 = 1_000;
pub const DEFAULT_MAX_LEN: usize = 16;
pub const DEFAULT_MAX_AUT_LEN: usize = 8;
/// Counterexamples kept in a report; the rest are only counted.
pub const MAX_RECORDED_VIOLATIONS: usize = 16;

pub const REPORT_SCHEMA: &str = "qmcode.report/1";

mod rational_text {
    use num::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("bad rational {text:?}")))
    }

    pub mod list {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(rs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(rs.len()))?;
            for r in rs {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts
                .iter()
                .map(|t| t.parse().map_err(|_| D::Error::custom(format!("bad rational {t:?}"))))
                .collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: u64,
    /// Words (and generators) that produced the deviation.
    pub inputs: Vec<String>,
    /// Quasimorphism values involved, in the order of the check's formula.
    #[serde(with = "rational_text::list")]
    pub values: Vec<BigRational>,
    #[serde(with = "rational_text")]
    pub deviation: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    /// `defect`, `theta-subadditivity` or `invariance`.
    pub check: String,
    pub subject: String,
    pub trials: u64,
    #[serde(with = "rational_text")]
    pub max_observed: BigRational,
    #[serde(with = "rational_text")]
    pub bound: BigRational,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct ReportDocument {
    schema: String,
    report: CampaignReport,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn to_toml(&self) -> String {
        let doc = ReportDocument { schema: REPORT_SCHEMA.into(), report: self.clone() };
        toml::to_string(&doc).expect("report serializes")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let doc: ReportDocument =
            toml::from_str(text).map_err(|e| Error::InvalidArgument(format!("bad report document: {e}")))?;
        if doc.schema != REPORT_SCHEMA {
            return Err(Error::InvalidArgument(format!("unsupported report schema {:?}", doc.schema)));
        }
        Ok(doc.report)
    }
}

struct TrialOutcome {
    deviation: BigRational,
    violation: Option<Violation>,
}

fn run_trials<F>(trials: u64, seed: u64, f: F) -> Result<(BigRational, u64, Vec<Violation>)>
where
    F: Fn(u64, &mut rand_chacha::ChaCha8Rng) -> Result<TrialOutcome> + Sync,
{
    if trials == 0 {
        return Err(Error::InvalidArgument("a campaign needs at least one trial".into()));
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|i| f(i, &mut trial_rng(seed, i)))
        .collect::<Result<Vec<_>>>()?;
    let mut max = BigRational::zero();
    let mut count = 0;
    let mut kept = Vec::new();
    for o in outcomes {
        if o.deviation > max {
            max = o.deviation;
        }
        if let Some(v) = o.violation {
            count += 1;
            if kept.len() < MAX_RECORDED_VIOLATIONS {
                kept.push(v);
            }
        }
    }
    Ok((max, count, kept))
}

/// `h` that often begins by cancelling a suffix of `g`.
fn partner<R: Rng + ?Sized>(
    cfg: &Arc<GroupConfig>,
    g: &ReducedWord,
    max_len: usize,
    palette: &PaletteSampler,
    rng: &mut R,
) -> Result<ReducedWord> {
    let fresh = campaign_word(cfg, max_len, None, palette, rng);
    if rng.random_bool(0.5) {
        let k = rng.random_range(0..=g.len());
        g.suffix(g.len() - k).invert().multiply(&fresh)
    } else {
        Ok(fresh)
    }
}

/// Sampled lower bound on `D(q)`, checked against the a-priori bound.
pub fn estimate_defect(
    q: &QmSpec,
    cfg: &Arc<GroupConfig>,
    trials: u64,
    max_len: usize,
    seed: u64,
) -> Result<CampaignReport> {
    q.validate(cfg)?;
    let bound = a_priori_defect(q).value().clone();
    let (max_observed, violation_count, violations) = run_trials(trials, seed, |i, rng| {
        let palette = PaletteSampler::new(cfg, DEFAULT_RADIUS, rng);
        let g = campaign_word(cfg, max_len, None, &palette, rng);
        let h = partner(cfg, &g, max_len, &palette, rng)?;
        let gh = g.multiply(&h)?;
        let (fg, fh, fgh) = (evaluate(q, &g)?, evaluate(q, &h)?, evaluate(q, &gh)?);
        let deviation = (&fgh - &fg - &fh).abs();
        let violation = (deviation > bound).then(|| Violation {
            trial: i,
            inputs: vec![g.to_string(), h.to_string()],
            values: vec![fgh, fg, fh],
            deviation: deviation.clone(),
        });
        Ok(TrialOutcome { deviation, violation })
    })?;
    Ok(CampaignReport {
        check: "defect".into(),
        subject: q.to_string(),
        trials,
        max_observed,
        bound,
        violation_count,
        violations,
        seed,
    })
}

/// `|theta(w1 w2) - theta(w1) - theta(w2)| <= 2` on concatenations that are
/// already reduced.
pub fn check_theta_subadditivity(
    side: crate::words::Side,
    z: &Pattern,
    kind: CodeKind,
    cfg: &Arc<GroupConfig>,
    trials: u64,
    max_len: usize,
    seed: u64,
) -> Result<CampaignReport> {
    let weighted = kind == CodeKind::Weighted;
    if weighted && !cfg.factor(side).is_integer() {
        return Err(Error::NotIntegerFactor(side));
    }
    let theta = |w: &ReducedWord| -> Result<BigRational> {
        let c = if weighted { codes::weighted_z_code(w, side)? } else { codes::code(w, side) };
        Ok(BigRational::from_integer(codes::count_disjoint(c.entries(), z).into()))
    };
    let bound = BigRational::from_integer(THETA_SUBADDITIVITY_BOUND.into());
    let (max_observed, violation_count, violations) = run_trials(trials, seed, |i, rng| {
        let palette = PaletteSampler::new(cfg, DEFAULT_RADIUS, rng);
        let w1 = campaign_word(cfg, max_len, None, &palette, rng);
        let start = w1.last().map(|l| l.side.other());
        let w2 = campaign_word(cfg, max_len, start, &palette, rng);
        let w = w1.multiply(&w2)?;
        debug_assert_eq!(w.len(), w1.len() + w2.len());
        let (t, t1, t2) = (theta(&w)?, theta(&w1)?, theta(&w2)?);
        let deviation = (&t - &t1 - &t2).abs();
        let violation = (deviation > bound).then(|| Violation {
            trial: i,
            inputs: vec![w1.to_string(), w2.to_string()],
            values: vec![t, t1, t2],
            deviation: deviation.clone(),
        });
        Ok(TrialOutcome { deviation, violation })
    })?;
    let kind_name = if weighted { "weighted" } else { "code" };
    Ok(CampaignReport {
        check: "theta-subadditivity".into(),
        subject: format!("theta:{kind_name}:{side}:{z}"),
        trials,
        max_observed,
        bound,
        violation_count,
        violations,
        seed,
    })
}

/// Largest deviation `|q(g(w)) - q(w)|` claimed for one generator of each
/// requested kind: 0 where invariance is exact, `2 D(q)` for partial
/// conjugations.
pub fn invariance_bound(q: &QmSpec, cfg: &GroupConfig, kinds: &[GenKind]) -> Result<BigRational> {
    q.validate(cfg)?;
    if kinds.is_empty() {
        return Err(Error::InvalidArgument("no generator kinds requested".into()));
    }
    let mut bound = BigRational::zero();
    for &kind in kinds {
        match kind {
            GenKind::Swap if cfg.swap().is_none() => return Err(Error::SwapUnavailable),
            GenKind::Transvection if cfg.integer_side().is_none() => {
                return Err(Error::Precondition("transvections need an infinite cyclic factor".into()))
            }
            _ => {}
        }
        let claim = match kind {
            GenKind::FactorAuto => Some(BigRational::zero()),
            GenKind::PartialConjugation => {
                Some(a_priori_defect(q).value() * BigRational::from_integer(2.into()))
            }
            GenKind::Swap => q.is_side_symmetric().then(BigRational::zero),
            GenKind::Transvection => {
                let int_a = cfg.factor(crate::words::Side::A).is_integer();
                let int_b = cfg.factor(crate::words::Side::B).is_integer();
                let exact = int_a != int_b
                    && q.terms()
                        .iter()
                        .all(|(c, a)| c.is_zero() || (a.kind == CodeKind::Weighted && cfg.factor(a.side).is_integer()));
                exact.then(BigRational::zero)
            }
        };
        match claim {
            Some(b) => bound = bound.max(b),
            None => return Err(Error::NoInvarianceClaim { kind: kind.to_string(), qm: q.to_string() }),
        }
    }
    Ok(bound)
}

/// Invariance campaign with default word and automorphism lengths.
pub fn check_invariance(
    q: &QmSpec,
    cfg: &Arc<GroupConfig>,
    kinds: &[GenKind],
    trials: u64,
    seed: u64,
) -> Result<CampaignReport> {
    check_invariance_with(q, cfg, kinds, trials, DEFAULT_MAX_LEN, DEFAULT_MAX_AUT_LEN, seed)
}

/// Samples words `w` and automorphisms of length up to `max_aut_len`, and
/// measures the deviation of `q` at every generator step
/// `w_{i-1} -> g_i(w_{i-1})`.
pub fn check_invariance_with(
    q: &QmSpec,
    cfg: &Arc<GroupConfig>,
    kinds: &[GenKind],
    trials: u64,
    max_len: usize,
    max_aut_len: usize,
    seed: u64,
) -> Result<CampaignReport> {
    let bound = invariance_bound(q, cfg, kinds)?;
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    let (max_observed, violation_count, violations) = run_trials(trials, seed, |i, rng| {
        let palette = PaletteSampler::new(cfg, DEFAULT_RADIUS, rng);
        let w = campaign_word(cfg, max_len, None, &palette, rng);
        let len = rng.random_range(1..=max_aut_len.max(1));
        let phi = random_automorphism_with(cfg, &kinds, len, DEFAULT_RADIUS, rng)?;
        let mut cur = w;
        let mut fcur = evaluate(q, &cur)?;
        let mut worst = TrialOutcome { deviation: BigRational::zero(), violation: None };
        for g in &phi.gens {
            let next = apply_gen(g, &cur)?;
            let fnext = evaluate(q, &next)?;
            let deviation = (&fnext - &fcur).abs();
            if deviation > worst.deviation {
                let violation = (deviation > bound).then(|| Violation {
                    trial: i,
                    inputs: vec![cur.to_string(), g.format(cfg)],
                    values: vec![fnext.clone(), fcur.clone()],
                    deviation: deviation.clone(),
                });
                worst = TrialOutcome { deviation, violation };
            }
            cur = next;
            fcur = fnext;
        }
        Ok(worst)
    })?;
    Ok(CampaignReport {
        check: "invariance".into(),
        subject: format!(
            "{q} under {}",
            kinds.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        ),
        trials,
        max_observed,
        bound,
        violation_count,
        violations,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::Factor;

    fn cfg(a: Factor, b: Factor) -> Arc<GroupConfig> {
        GroupConfig::with_default_swap(a, b).into_shared()
    }

    fn q(text: &str) -> QmSpec {
        text.parse().unwrap()
    }

    #[test]
    fn defect_within_bound() {
        let g = cfg(Factor::cyclic(5).unwrap(), Factor::cyclic(2).unwrap());
        let r = estimate_defect(&q("code:A:(1,2)"), &g, 2000, 16, 1).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.bound, BigRational::from_integer(30.into()));
        assert!(r.violations.is_empty() == (r.max_observed <= r.bound));
    }

    #[test]
    fn zero_combination_has_no_defect() {
        let g = cfg(Factor::cyclic(5).unwrap(), Factor::cyclic(2).unwrap());
        let r = estimate_defect(&q("0*code:A:(1,2)"), &g, 500, 16, 2).unwrap();
        assert!(r.max_observed.is_zero());
        assert!(r.bound.is_zero());
    }

    #[test]
    fn sampled_defects() {
        let g = cfg(Factor::cyclic(5).unwrap(), Factor::cyclic(2).unwrap());
        // a palindromic pattern cancels against its reversal
        let r = estimate_defect(&q("code:A:(1)"), &g, 300, 8, 3).unwrap();
        assert!(r.max_observed.is_zero());
        let r = estimate_defect(&q("code:A:(1,2)"), &g, 300, 8, 3).unwrap();
        assert!(r.max_observed >= BigRational::from_integer(1.into()));
        assert!(r.passed());
    }

    #[test]
    fn reports_are_reproducible_and_round_trip() {
        let g = cfg(Factor::Integer, Factor::cyclic(3).unwrap());
        let a = estimate_defect(&q("weighted:A:(1,2,3)"), &g, 300, 12, 9).unwrap();
        let b = estimate_defect(&q("weighted:A:(1,2,3)"), &g, 300, 12, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(CampaignReport::from_toml(&a.to_toml()).unwrap(), a);
    }

    #[test]
    fn exact_invariance_cases() {
        let g = cfg(Factor::cyclic(5).unwrap(), Factor::cyclic(7).unwrap());
        let r = check_invariance(&q("code:A:(1,2,3)"), &g, &[GenKind::FactorAuto], 300, 4).unwrap();
        assert!(r.max_observed.is_zero());

        let z = cfg(Factor::Integer, Factor::cyclic(3).unwrap());
        let kinds = [GenKind::FactorAuto, GenKind::Transvection];
        let r = check_invariance(&q("weighted:A:(1,2,3)"), &z, &kinds, 300, 5).unwrap();
        assert!(r.max_observed.is_zero(), "{r:?}");

        let s = cfg(Factor::cyclic(3).unwrap(), Factor::cyclic(3).unwrap());
        let sum = QmSpec::symmetric_sum(Pattern::from_u64s(&[1, 2, 3]).unwrap());
        let r = check_invariance(&sum, &s, &[GenKind::Swap, GenKind::FactorAuto], 300, 6).unwrap();
        assert!(r.max_observed.is_zero());
    }

    #[test]
    fn conjugation_steps_stay_within_twice_the_defect() {
        let g = cfg(Factor::cyclic(5).unwrap(), Factor::cyclic(7).unwrap());
        let r = check_invariance(&q("code:A:(1,2)"), &g, &[GenKind::PartialConjugation], 300, 7).unwrap();
        assert_eq!(r.bound, BigRational::from_integer(60.into()));
        assert!(r.passed());
        assert!(r.max_observed > BigRational::zero());
    }

    #[test]
    fn unclaimed_kinds_are_refused() {
        let s = cfg(Factor::cyclic(3).unwrap(), Factor::cyclic(3).unwrap());
        assert!(matches!(
            check_invariance(&q("code:A:(1,2,3)"), &s, &[GenKind::Swap], 10, 0),
            Err(Error::NoInvarianceClaim { .. })
        ));
        let z = cfg(Factor::Integer, Factor::cyclic(3).unwrap());
        assert!(matches!(
            check_invariance(&q("code:A:(1,2,3)"), &z, &[GenKind::Transvection], 10, 0),
            Err(Error::NoInvarianceClaim { .. })
        ));
        let none = GroupConfig::new(Factor::cyclic(3).unwrap(), Factor::cyclic(5).unwrap(), None).into_shared();
        assert!(matches!(
            check_invariance(&q("code:A:(1,2,3)"), &none, &[GenKind::Swap], 10, 0),
            Err(Error::SwapUnavailable)
        ));
        assert!(check_invariance(&q("code:A:(1,2,3)"), &none, &[GenKind::Transvection], 10, 0).is_err());
    }

    #[test]
    fn theta_subadditivity() {
        let g = cfg(Factor::Integer, Factor::cyclic(3).unwrap());
        let z = Pattern::from_u64s(&[1, 2]).unwrap();
        let r = check_theta_subadditivity(crate::words::Side::A, &z, CodeKind::Weighted, &g, 1000, 12, 8).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
