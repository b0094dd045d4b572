use std::collections::HashSet;
use std::ops::Deref;

use serde::Serialize;

use super::{valid_id, Poset};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// A poset together with its rank function: minimal elements have rank 1 and
/// ranks increase by one along covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoset {
    poset: Poset,
    rank: Vec<usize>,
}

impl Deref for GradedPoset {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl GradedPoset {
    /// Propagates rank 1 upward from the minimal elements and fails with
    /// [`Error::NotGraded`] as soon as two parents of an element disagree.
    pub fn new(poset: Poset) -> Result<GradedPoset> {
        let mut rank = vec![0usize; poset.len()];
        for &p in poset.topological_order() {
            let parents = poset.parents(p);
            rank[p] = match parents.first() {
                None => 1,
                Some(&first) => {
                    let r = rank[first];
                    if parents.iter().any(|&x| rank[x] != r) {
                        return Err(Error::NotGraded);
                    }
                    r + 1
                }
            };
        }
        Ok(GradedPoset { poset, rank })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn rank(&self, p: usize) -> usize {
        self.rank[p]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Largest rank (0 for the empty poset).
    pub fn top_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    /// Smallest rank of a maximal element (0 for the empty poset).
    pub fn min_max_rank(&self) -> usize {
        bits::ones(self.maximal()).map(|p| self.rank[p]).min().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        self.min_max_rank() == self.top_rank()
    }

    /// Elements of rank `i`.
    pub fn layer(&self, i: usize) -> Mask {
        bits::from_indices((0..self.len()).filter(|&p| self.rank[p] == i))
    }

    /// `P_i` minus the maximal elements.
    pub fn trimmed_layer(&self, i: usize) -> Mask {
        self.layer(i) & !self.maximal()
    }

    /// `|P_1|, |P_2|, ...`
    pub fn layer_sizes(&self) -> Vec<usize> {
        (1..=self.top_rank())
            .map(|i| self.layer(i).count_ones() as usize)
            .collect()
    }

    pub fn ranks_mask<I: IntoIterator<Item = usize>>(&self, ranks: I) -> Mask {
        ranks.into_iter().fold(0, |m, i| m | self.layer(i))
    }

    /// Induced subposet on the elements whose rank lies in `ranks`, with the
    /// Hasse diagram of the restricted order and ranks renumbered 1..=|S|.
    pub fn rank_selection(&self, ranks: &[usize]) -> Result<GradedPoset> {
        if ranks.is_empty() {
            return Err(Error::EmptySelection);
        }
        let max = self.top_rank();
        let mut sel = ranks.to_vec();
        sel.sort_unstable();
        sel.dedup();
        if let Some(&bad) = sel.iter().find(|&&r| r == 0 || r > max) {
            return Err(Error::RankOutOfRange { rank: bad, max });
        }
        let mask = self.ranks_mask(sel.iter().copied());
        let sub = GradedPoset::new(self.poset.induced(mask))?;
        debug_assert!(bits::ones(mask)
            .enumerate()
            .all(|(k, p)| sel[sub.rank[k] - 1] == self.rank[p]));
        Ok(sub)
    }

    /// The bipartite graph of covers between ranks `i` and `i + 1`. With
    /// `trim`, maximal elements of rank `i` are left out of the bottom.
    pub fn layer_pair(&self, i: usize, trim: bool) -> Result<BipartiteLayer> {
        let max = self.top_rank();
        if i == 0 || i >= max {
            return Err(Error::RankOutOfRange {
                rank: i,
                max: max.saturating_sub(1),
            });
        }
        let bottom = if trim { self.trimmed_layer(i) } else { self.layer(i) };
        Ok(self.bipartite_between(bottom, self.layer(i + 1)))
    }

    /// Covers from `bottom` to `top` as a bipartite layer.
    pub(crate) fn bipartite_between(&self, bottom: Mask, top: Mask) -> BipartiteLayer {
        let b: Vec<usize> = bits::to_indices(bottom);
        let t: Vec<usize> = bits::to_indices(top);
        let adj = b
            .iter()
            .map(|&p| {
                t.iter()
                    .enumerate()
                    .filter(|&(_, &q)| self.is_cover(p, q))
                    .fold(0, |m, (k, _)| m | bits::bit(k))
            })
            .collect();
        BipartiteLayer {
            bottom: b.iter().map(|&i| self.id(i).to_string()).collect(),
            top: t.iter().map(|&i| self.id(i).to_string()).collect(),
            adj,
        }
    }
}

/// A bipartite graph with a bottom and a top side; `adj[b]` is the mask of
/// top vertices adjacent to bottom vertex `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteLayer {
    bottom: Vec<String>,
    top: Vec<String>,
    #[serde(skip)]
    adj: Vec<Mask>,
}

impl BipartiteLayer {
    pub fn new<S: AsRef<str>>(bottom: &[S], top: &[S], edges: &[(S, S)]) -> Result<Self> {
        let bottom: Vec<String> = bottom.iter().map(|s| s.as_ref().to_string()).collect();
        let top: Vec<String> = top.iter().map(|s| s.as_ref().to_string()).collect();
        bits::check_capacity(bottom.len().max(top.len()))?;
        let mut seen = HashSet::new();
        for v in bottom.iter().chain(&top) {
            if !valid_id(v) {
                return Err(Error::InvalidParameter(format!("invalid vertex id `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateElement(v.clone()));
            }
        }
        let pos = |side: &[String], s: &str| {
            side.iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut adj = vec![0; bottom.len()];
        for (b, t) in edges {
            let i = pos(&bottom, b.as_ref())?;
            let j = pos(&top, t.as_ref())?;
            adj[i] |= bits::bit(j);
        }
        Ok(BipartiteLayer { bottom, top, adj })
    }

    /// Builds a layer from adjacency masks over `top`.
    pub fn from_adjacency(bottom: Vec<String>, top: Vec<String>, adj: Vec<Mask>) -> Self {
        assert_eq!(bottom.len(), adj.len());
        BipartiteLayer { bottom, top, adj }
    }

    pub fn bottom(&self) -> &[String] {
        &self.bottom
    }

    pub fn top(&self) -> &[String] {
        &self.top
    }

    pub fn neighbors(&self, b: usize) -> Mask {
        self.adj[b]
    }

    pub fn adjacency(&self) -> &[Mask] {
        &self.adj
    }

    /// Bottom neighbours of top vertex `t`.
    pub fn top_neighbors(&self, t: usize) -> Mask {
        bits::from_indices((0..self.bottom.len()).filter(|&b| bits::contains(self.adj[b], t)))
    }

    pub fn has_edge(&self, b: usize, t: usize) -> bool {
        bits::contains(self.adj[b], t)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.bottom.len())
            .flat_map(|b| bits::ones(self.adj[b]).map(move |t| (b, t)))
            .collect()
    }

    pub fn edge_ids(&self) -> Vec<(&str, &str)> {
        self.edges()
            .into_iter()
            .map(|(b, t)| (self.bottom[b].as_str(), self.top[t].as_str()))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn is_complete(&self) -> bool {
        let all = bits::full(self.top.len());
        self.adj.iter().all(|&m| m == all)
    }

    /// Swaps the roles of the two sides.
    pub fn transpose(&self) -> BipartiteLayer {
        let adj = (0..self.top.len()).map(|t| self.top_neighbors(t)).collect();
        BipartiteLayer {
            bottom: self.top.clone(),
            top: self.bottom.clone(),
            adj,
        }
    }

    /// Vertices with no incident edge, as `(bottom mask, top mask)`.
    pub fn isolated(&self) -> (Mask, Mask) {
        let b = bits::from_indices((0..self.bottom.len()).filter(|&b| self.adj[b] == 0));
        let covered = self.adj.iter().fold(0, |m, &a| m | a);
        (b, bits::full(self.top.len()) & !covered)
    }
}
