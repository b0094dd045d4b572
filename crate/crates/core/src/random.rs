//! Seeded random graded posets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::MAX_ELEMENTS;
use crate::error::{Error, Result};
use crate::poset::{GradedPoset, Poset};

/// Layers of the given widths, with covers only between consecutive layers.
/// Each element above the first layer gets one parent chosen uniformly and
/// every other element of the layer below as a parent with probability
/// `edge_probability`. Element `k` (from 1) of layer `i` is named `p{i}_{k}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomPosetSpec {
    pub widths: Vec<usize>,
    pub edge_probability: f64,
    pub seed: u64,
}

impl RandomPosetSpec {
    pub fn new(widths: Vec<usize>, edge_probability: f64, seed: u64) -> Result<Self> {
        if widths.is_empty() || widths.contains(&0) {
            return Err(Error::InvalidParameter("widths must be positive and nonempty".into()));
        }
        let total: usize = widths.iter().sum();
        if total > MAX_ELEMENTS {
            return Err(Error::CapacityExceeded {
                limit: MAX_ELEMENTS,
                got: total,
            });
        }
        if !(0.0..=1.0).contains(&edge_probability) {
            return Err(Error::InvalidParameter(format!(
                "edge probability {edge_probability} is outside [0, 1]"
            )));
        }
        Ok(RandomPosetSpec {
            widths,
            edge_probability,
            seed,
        })
    }

    pub fn ranks(&self) -> usize {
        self.widths.len()
    }

    /// The poset; its rank function is the layer index.
    pub fn generate(&self) -> Result<GradedPoset> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut ids = Vec::new();
        let mut start = Vec::new();
        for (i, &w) in self.widths.iter().enumerate() {
            start.push(ids.len());
            ids.extend((1..=w).map(|k| format!("p{}_{k}", i + 1)));
        }
        let mut covers = Vec::new();
        for i in 1..self.widths.len() {
            let below = self.widths[i - 1];
            for k in 0..self.widths[i] {
                let forced = rng.gen_range(0..below);
                for j in 0..below {
                    if j == forced || rng.gen_bool(self.edge_probability) {
                        covers.push((start[i - 1] + j, start[i] + k));
                    }
                }
            }
        }
        GradedPoset::new(Poset::from_indexed(ids, &covers)?)
    }
}

/// `count` specifications drawn from `seed`: between `min_rank` and
/// `max_rank` layers, at most `max_elements` elements in all, and edge
/// probabilities from a fixed spread. Half of them have weakly decreasing
/// widths, where unmixed and Cohen-Macaulay posets are common.
pub fn random_specs(
    count: usize,
    seed: u64,
    min_rank: usize,
    max_rank: usize,
    max_elements: usize,
) -> Result<Vec<RandomPosetSpec>> {
    if min_rank == 0 || min_rank > max_rank || max_elements < max_rank {
        return Err(Error::InvalidParameter(
            "need 1 <= min_rank <= max_rank <= max_elements".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probabilities = [0.15, 0.35, 0.6, 0.85];
    (0..count)
        .map(|_| {
            let r = rng.gen_range(min_rank..=max_rank);
            let cap = (max_elements / r).clamp(1, 4);
            let mut widths: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=cap)).collect();
            if rng.gen_bool(0.5) {
                widths.sort_unstable_by(|a, b| b.cmp(a));
            }
            let q = probabilities[rng.gen_range(0..probabilities.len())];
            RandomPosetSpec::new(widths, q, rng.gen())
        })
        .collect()
}
