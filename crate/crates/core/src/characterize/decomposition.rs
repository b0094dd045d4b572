use serde::Serialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::poset::{GradedPoset, Poset};

/// Disjoint maximal chains covering a graded poset, each starting in rank 1.
/// Chain `u` is the label of its elements: the element of rank `k` on chain
/// `u` is `a^k_u`, and the order of the chains is the labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Vec<usize>>,
    label: Vec<usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

impl ChainDecomposition {
    /// Checks that `chains` are pairwise disjoint saturated chains from rank 1
    /// to a maximal element whose union is the whole poset.
    pub fn new(g: &GradedPoset, chains: Vec<Vec<usize>>) -> Result<Self> {
        let mut label = vec![usize::MAX; g.len()];
        for (u, c) in chains.iter().enumerate() {
            let Some((&first, &last)) = c.first().zip(c.last()) else {
                return Err(invalid(format!("chain {u} is empty")));
            };
            if first >= g.len() || g.rank(first) != 1 {
                return Err(invalid(format!("chain {u} does not start in rank 1")));
            }
            for w in c.windows(2) {
                if w[1] >= g.len() || !g.is_cover(w[0], w[1]) {
                    return Err(invalid(format!("chain {u} is not saturated")));
                }
            }
            if !bits::contains(g.maximal(), last) {
                return Err(invalid(format!("chain {u} does not end at a maximal element")));
            }
            for &x in c {
                if label[x] != usize::MAX {
                    return Err(invalid(format!("`{}` lies on two chains", g.id(x))));
                }
                label[x] = u;
            }
        }
        if let Some(x) = label.iter().position(|&l| l == usize::MAX) {
            return Err(invalid(format!("`{}` lies on no chain", g.id(x))));
        }
        Ok(ChainDecomposition { chains, label })
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Chain index of element `x`.
    pub fn label(&self, x: usize) -> usize {
        self.label[x]
    }

    /// The element `a^rank_label`, if chain `label` reaches that rank.
    pub fn element(&self, rank: usize, label: usize) -> Option<usize> {
        self.chains.get(label)?.get(rank.checked_sub(1)?).copied()
    }

    /// Labels of the chains reaching `rank`.
    pub fn labels_at(&self, rank: usize) -> Mask {
        self.chains
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() >= rank)
            .fold(0, |m, (u, _)| m | bits::bit(u))
    }

    /// True iff every cover `a^i_u < a^{i+1}_v` has `u <= v`.
    pub fn is_order_compatible(&self, p: &Poset) -> bool {
        p.covers().all(|(x, y)| self.label[x] <= self.label[y])
    }

    /// The same chains listed in a new order: `order[k]` is the old label of
    /// the chain that gets label `k`.
    pub fn relabeled(&self, order: &[usize]) -> Self {
        let chains: Vec<Vec<usize>> = order.iter().map(|&u| self.chains[u].clone()).collect();
        let mut label = vec![0; self.label.len()];
        for (u, c) in chains.iter().enumerate() {
            for &x in c {
                label[x] = u;
            }
        }
        ChainDecomposition { chains, label }
    }

    pub fn to_ids(&self, p: &Poset) -> ChainDecompositionIds {
        ChainDecompositionIds {
            chains: self
                .chains
                .iter()
                .map(|c| c.iter().map(|&x| p.id(x).to_string()).collect())
                .collect(),
        }
    }
}

/// Serializable form of a [`ChainDecomposition`]: chains of element ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainDecompositionIds {
    pub chains: Vec<Vec<String>>,
}
