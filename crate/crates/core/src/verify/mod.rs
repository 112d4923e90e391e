//! Randomized certification campaigns, witness words and certified bounds.

mod bounds;
mod campaign;
mod sample;
mod witness;

pub use bounds::{norm_lower_bound, scl_lower_bound};
pub use campaign::{
    check_invariance, check_invariance_with, check_theta_subadditivity, estimate_defect, invariance_bound,
    CampaignReport, Violation, DEFAULT_DEFECT_TRIALS, DEFAULT_INVARIANCE_TRIALS, DEFAULT_MAX_AUT_LEN,
    DEFAULT_MAX_LEN, MAX_RECORDED_VIOLATIONS, REPORT_SCHEMA,
};
pub use sample::{sample_word, sample_word_with, trial_rng, DEFAULT_RADIUS};
pub use witness::{
    witness_commutator_word, witness_qm, witness_word, CommutatorChoices, CommutatorWitness, DerivationStep,
    WitnessMode, WitnessSpec,
};
