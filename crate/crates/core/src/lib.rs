//! Code and weighted-code quasimorphisms on free products `A * B`.
//!
//! Words over a free product of two factors (integers, cyclic groups or
//! finite groups given by a Cayley table) are reduced, turned into A/B-codes
//! or weighted Z-codes, and fed to counting quasimorphisms. The crate can
//! evaluate and homogenise these, act on words by automorphisms of `A * B`,
//! check defect and invariance bounds by randomized search, and build the
//! explicit witness words that give linear independence and lower bounds
//! on `scl_Aut`.

pub mod automorphisms;
pub mod cli;
pub mod codes;
pub mod error;
pub mod factors;
pub mod parser;
pub mod quasimorphisms;
pub mod verify;
pub mod words;

pub use automorphisms::{apply, aut_commutator, Automorphism, AutomorphismGen, FactorMap, GenKind};
pub use codes::{code, count_disjoint, is_generic, weighted_z_code, Code, Pattern};
pub use error::{Error, Result};
pub use factors::{CayleyTable, Element, Factor, GroupConfig, RawTable, SwapIso};
pub use parser::{format_word, parse_config, parse_reduced, parse_word};
pub use quasimorphisms::{a_priori_defect, evaluate, homogenise, theta, CodeKind, QmSpec};
pub use words::{reduce, Letter, ReducedWord, Side, Word};
