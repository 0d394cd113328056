use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::TopologyError;

/// Largest space for which pairs of subsets are enumerated exhaustively.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 12;

/// How loops over pairs of point subsets are run.
///
/// Single-subset loops are always exhaustive (at most `2^20` subsets).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubsetMode {
    /// Every pair; refused above [`EXHAUSTIVE_PAIR_LIMIT`] points.
    #[default]
    Exhaustive,
    /// Exhaustive up to the limit, `samples` seeded random pairs above it.
    Sampled { seed: u64, samples: usize },
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct SubsetPlan {
    len: usize,
    sampled: Option<(u64, usize)>,
}

impl SubsetMode {
    pub(crate) fn plan(&self, len: usize) -> Result<SubsetPlan, TopologyError> {
        match *self {
            _ if len <= EXHAUSTIVE_PAIR_LIMIT => Ok(SubsetPlan { len, sampled: None }),
            SubsetMode::Exhaustive => Err(TopologyError::ExhaustiveLimit {
                points: len,
                limit: EXHAUSTIVE_PAIR_LIMIT,
            }),
            SubsetMode::Sampled { seed, samples } => Ok(SubsetPlan {
                len,
                sampled: Some((seed, samples)),
            }),
        }
    }
}

impl SubsetPlan {
    pub(crate) fn is_sampled(&self) -> bool {
        self.sampled.is_some()
    }

    /// Every subset bitmask, in increasing order.
    pub(crate) fn singles(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.len)
    }

    pub(crate) fn pairs(&self) -> Box<dyn Iterator<Item = (u32, u32)>> {
        let count = 1u32 << self.len;
        match self.sampled {
            None => Box::new((0..count).flat_map(move |x| (0..count).map(move |y| (x, y)))),
            Some((seed, samples)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new(
                    (0..samples).map(move |_| (rng.gen_range(0..count), rng.gen_range(0..count))),
                )
            }
        }
    }
}
