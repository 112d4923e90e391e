//! Random reduced words.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::factors::{Element, GroupConfig};
use crate::words::{Letter, ReducedWord, Side};

/// Magnitude bound for integer letters unless configured otherwise.
pub const DEFAULT_RADIUS: u32 = 9;

/// RNG for trial `index` of a campaign seeded by `seed`. The mapping does
/// not depend on how trials are scheduled.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_side<R: Rng + ?Sized>(rng: &mut R) -> Side {
    if rng.random_bool(0.5) {
        Side::A
    } else {
        Side::B
    }
}

/// Reduced word with uniform length in `1..=max_len`, alternating sides from
/// `start`, letters uniform over non-trivial elements.
pub fn sample_word_with<R: Rng + ?Sized>(
    cfg: &Arc<GroupConfig>,
    max_len: usize,
    start: Option<Side>,
    radius: u32,
    rng: &mut R,
) -> ReducedWord {
    let len = rng.random_range(1..=max_len.max(1));
    let mut side = start.unwrap_or_else(|| random_side(rng));
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        letters.push(Letter::new(side, cfg.factor(side).sample_nontrivial(rng, radius)));
        side = side.other();
    }
    ReducedWord::from_reduced_letters(cfg.clone(), letters).expect("alternating non-trivial letters")
}

/// Reproducible uniform sample.
pub fn sample_word(cfg: &Arc<GroupConfig>, max_len: usize, seed: u64) -> ReducedWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_word_with(cfg, max_len, None, DEFAULT_RADIUS, &mut rng)
}

/// Letters drawn from a small per-word palette, so that equal letters
/// repeat and codes have long runs.
pub(crate) struct PaletteSampler {
    palette: [Vec<Element>; 2],
}

impl PaletteSampler {
    pub(crate) fn new<R: Rng + ?Sized>(cfg: &GroupConfig, radius: u32, rng: &mut R) -> Self {
        let mut pick = |side: Side| {
            let k = rng.random_range(1..=3);
            (0..k).map(|_| cfg.factor(side).sample_nontrivial(rng, radius)).collect::<Vec<_>>()
        };
        let a = pick(Side::A);
        let b = pick(Side::B);
        PaletteSampler { palette: [a, b] }
    }

    pub(crate) fn word<R: Rng + ?Sized>(
        &self,
        cfg: &Arc<GroupConfig>,
        max_len: usize,
        start: Option<Side>,
        rng: &mut R,
    ) -> ReducedWord {
        let len = rng.random_range(1..=max_len.max(1));
        let mut side = start.unwrap_or_else(|| random_side(rng));
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            let p = &self.palette[side as usize];
            letters.push(Letter::new(side, p[rng.random_range(0..p.len())].clone()));
            side = side.other();
        }
        ReducedWord::from_reduced_letters(cfg.clone(), letters).expect("alternating non-trivial letters")
    }
}

/// Mixture used by campaigns: uniform or palette letters, each half the time.
pub(crate) fn campaign_word<R: Rng + ?Sized>(
    cfg: &Arc<GroupConfig>,
    max_len: usize,
    start: Option<Side>,
    palette: &PaletteSampler,
    rng: &mut R,
) -> ReducedWord {
    if rng.random_bool(0.5) {
        palette.word(cfg, max_len, start, rng)
    } else {
        sample_word_with(cfg, max_len, start, DEFAULT_RADIUS, rng)
    }
}
