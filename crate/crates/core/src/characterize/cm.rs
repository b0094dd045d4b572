//! Cohen-Macaulayness of graded posets and of bipartite graphs, and
//! bi-Cohen-Macaulayness.

use std::collections::VecDeque;

use serde::Serialize;

use super::decomposition::ChainDecomposition;
use super::ferrers::has_linear_resolution_structural;
use super::matching::{alternating_cycle, left_perfect_matching};
use super::unmixed::check_unmixed_structural;
use super::verdict::{Edge, Verdict, Witness};
use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::poset::{are_isomorphic, hom_rt_poset, BipartiteLayer, GradedPoset};

fn edge(g: &GradedPoset, x: usize, y: usize) -> Edge {
    (g.id(x).to_string(), g.id(y).to_string())
}

/// Backtracking over perfect matchings between the non-maximal elements of
/// each rank and the next rank. Chains inherit the label of their rank-1
/// element; every cover between different chains adds an arc to a digraph
/// on labels, and a branch dies as soon as that digraph has a cycle.
struct LabelSearch<'a> {
    g: &'a GradedPoset,
    /// `(non-maximal elements of rank i, elements of rank i + 1)`.
    layers: Vec<(Vec<usize>, Vec<usize>)>,
    label: Vec<usize>,
    /// Arcs `(u, v, x, y)`: chain `u` must precede chain `v` because of the
    /// cover `x < y`.
    arcs: Vec<(usize, usize, usize, usize)>,
    nodes: usize,
    limit: usize,
    first_cycle: Option<Vec<Edge>>,
}

impl LabelSearch<'_> {
    fn layer(&mut self, i: usize, reach: &[Mask]) -> Result<bool> {
        if i == self.layers.len() {
            return Ok(true);
        }
        self.assign(i, 0, 0, reach)
    }

    fn assign(&mut self, i: usize, k: usize, used: Mask, reach: &[Mask]) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::budget("labeling search", self.limit));
        }
        if k == self.layers[i].1.len() {
            return self.close_layer(i, reach);
        }
        let y = self.layers[i].1[k];
        for bi in 0..self.layers[i].0.len() {
            let x = self.layers[i].0[bi];
            if bits::contains(used, bi) || !self.g.is_cover(x, y) {
                continue;
            }
            self.label[y] = self.label[x];
            if self.assign(i, k + 1, used | bits::bit(bi), reach)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Adds the arcs of all covers from rank `i + 1` to rank `i + 2` and
    /// descends to the next layer unless they close a cycle.
    fn close_layer(&mut self, i: usize, reach: &[Mask]) -> Result<bool> {
        let mark = self.arcs.len();
        let mut reach = reach.to_vec();
        for bi in 0..self.layers[i].0.len() {
            let x = self.layers[i].0[bi];
            for &y in self.g.children(x) {
                let (u, v) = (self.label[x], self.label[y]);
                if u == v {
                    continue;
                }
                if bits::contains(reach[v], u) {
                    if self.first_cycle.is_none() {
                        self.first_cycle = Some(self.cycle_through(v, u, (x, y)));
                    }
                    self.arcs.truncate(mark);
                    return Ok(false);
                }
                self.arcs.push((u, v, x, y));
                let add = reach[v] | bits::bit(v);
                for (w, r) in reach.iter_mut().enumerate() {
                    if w == u || bits::contains(*r, u) {
                        *r |= add;
                    }
                }
            }
        }
        let found = self.layer(i + 1, &reach)?;
        if !found {
            self.arcs.truncate(mark);
        }
        Ok(found)
    }

    /// Covers along a path of arcs from chain `from` to chain `to`, closed
    /// by the cover `last`.
    fn cycle_through(&self, from: usize, to: usize, last: (usize, usize)) -> Vec<Edge> {
        let mut prev: Vec<Option<usize>> = vec![None; self.label.len()];
        let mut seen = bits::bit(from);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for (k, &(a, b, _, _)) in self.arcs.iter().enumerate() {
                if a == u && !bits::contains(seen, b) {
                    seen |= bits::bit(b);
                    prev[b] = Some(k);
                    queue.push_back(b);
                }
            }
        }
        let mut path = Vec::new();
        let mut at = to;
        while at != from {
            let Some(k) = prev[at] else { break };
            let (a, _, x, y) = self.arcs[k];
            path.push(edge(self.g, x, y));
            at = a;
        }
        path.reverse();
        path.push(edge(self.g, last.0, last.1));
        path
    }
}

/// Topological order of labels `0..n` under `arcs`, smallest label first
/// among the available ones.
fn topological_order(n: usize, arcs: &[(usize, usize, usize, usize)]) -> Vec<usize> {
    let mut indegree = vec![0usize; n];
    for &(_, v, _, _) in arcs {
        indegree[v] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut done = 0 as Mask;
    while order.len() < n {
        let Some(u) = (0..n).find(|&u| !bits::contains(done, u) && indegree[u] == 0) else {
            break;
        };
        done |= bits::bit(u);
        order.push(u);
        for &(a, v, _, _) in arcs {
            if a == u {
                indegree[v] -= 1;
            }
        }
    }
    order
}

/// Decides Cohen-Macaulayness of a graded poset: as many minimal as maximal
/// elements, unmixedness, and a decomposition into disjoint maximal chains
/// whose chains can be ordered so that every cover goes from a chain to the
/// same or a later one. The certificate is such a decomposition, labeled in
/// that order.
pub fn check_cm_structural(g: &GradedPoset, budgets: &Budgets) -> Result<Verdict<ChainDecomposition>> {
    let minimal = g.layer(1).count_ones() as usize;
    let maximal = g.maximal().count_ones() as usize;
    if minimal != maximal {
        return Ok(Verdict::Fails(Witness::MinimalMaximalMismatch { minimal, maximal }));
    }
    if let Verdict::Fails(w) = check_unmixed_structural(g, budgets)? {
        return Ok(Verdict::Fails(w));
    }
    let mut label = vec![usize::MAX; g.len()];
    for (u, x) in bits::ones(g.layer(1)).enumerate() {
        label[x] = u;
    }
    let layers = (1..g.top_rank())
        .map(|i| (bits::to_indices(g.trimmed_layer(i)), bits::to_indices(g.layer(i + 1))))
        .collect();
    let mut search = LabelSearch {
        g,
        layers,
        label,
        arcs: Vec::new(),
        nodes: 0,
        limit: budgets.matching_nodes,
        first_cycle: None,
    };
    if !search.layer(0, &vec![0; minimal])? {
        return Ok(Verdict::Fails(Witness::NoCompatibleLabeling {
            cycle: search.first_cycle.unwrap_or_default(),
        }));
    }
    let mut chains: Vec<Vec<usize>> = vec![Vec::new(); minimal];
    for x in 0..g.len() {
        chains[search.label[x]].push(x);
    }
    for c in &mut chains {
        c.sort_by_key(|&x| g.rank(x));
    }
    let order = topological_order(minimal, &search.arcs);
    let d = ChainDecomposition::new(g, chains)?.relabeled(&order);
    debug_assert!(d.is_order_compatible(g));
    Ok(Verdict::Holds(d))
}

/// A labeling `a_1, ..., a_t` of the bottom side and `b_1, ..., b_t` of the
/// top side with every `a_i b_i` an edge, edges transitive, and `a_i b_j` an
/// edge only when `i <= j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HerzogHibiLabeling {
    pub bottom: Vec<String>,
    pub top: Vec<String>,
}

/// Decides Cohen-Macaulayness of a bipartite graph by the labeling
/// criterion. Such a labeling makes the biadjacency matrix unitriangular,
/// so the perfect matching is unique; the edges then define a relation on
/// the matched pairs that has to be a partial order.
pub fn herzog_hibi_bipartite_cm(l: &BipartiteLayer) -> Verdict<HerzogHibiLabeling> {
    let (n, m) = (l.bottom().len(), l.top().len());
    if n != m {
        return Verdict::Fails(Witness::UnequalSides { bottom: n, top: m });
    }
    let adj = l.adjacency();
    let (bot, top) = (|a: usize| l.bottom()[a].clone(), |b: usize| l.top()[b].clone());
    let mate = match left_perfect_matching(adj, m) {
        Ok(mate) => mate,
        Err((s, ns)) => {
            return Verdict::Fails(Witness::HallViolation {
                rank: None,
                elements: bits::ones(s).map(bot).collect(),
                neighbors: bits::ones(ns).map(top).collect(),
            })
        }
    };
    let matched = |mate: &[usize]| (0..n).map(|a| (bot(a), top(mate[a]))).collect::<Vec<_>>();
    if let Some(cycle) = alternating_cycle(adj, &mate) {
        let mut other = mate.clone();
        for (k, &a) in cycle.iter().enumerate() {
            other[a] = mate[cycle[(k + 1) % cycle.len()]];
        }
        return Verdict::Fails(Witness::MultiplePerfectMatchings {
            first: matched(&mate),
            second: matched(&other),
        });
    }
    let le = |a: usize, b: usize| bits::contains(adj[a], mate[b]);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if le(a, b) && le(b, c) && !le(a, c) {
                    return Verdict::Fails(Witness::NotTransitive {
                        present: [(bot(a), top(mate[b])), (bot(b), top(mate[c]))],
                        missing: (bot(a), top(mate[c])),
                    });
                }
            }
        }
    }
    // A strict predecessor has a strictly smaller down-set.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| ((0..n).filter(|&b| le(b, a)).count(), a));
    Verdict::Holds(HerzogHibiLabeling {
        bottom: order.iter().map(|&a| bot(a)).collect(),
        top: order.iter().map(|&a| top(mate[a])).collect(),
    })
}

/// An isomorphism onto the poset of isotone maps `[rank] -> [width]`, as
/// pairs `(element, image)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiCmCertificate {
    pub rank: usize,
    pub width: usize,
    pub isomorphism: Vec<Edge>,
}

/// Decides bi-Cohen-Macaulayness: Cohen-Macaulay with a linear resolution.
/// The certificate is an isomorphism onto the poset of isotone maps from
/// the rank chain to the chain of minimal elements; failing to find one is
/// reported as a witness.
pub fn is_bi_cm(g: &GradedPoset, budgets: &Budgets) -> Result<Verdict<BiCmCertificate>> {
    if let Verdict::Fails(w) = check_cm_structural(g, budgets)? {
        return Ok(Verdict::Fails(w));
    }
    if let Verdict::Fails(w) = has_linear_resolution_structural(g) {
        return Ok(Verdict::Fails(w));
    }
    let (rank, width) = (g.top_rank(), g.layer(1).count_ones() as usize);
    let h = hom_rt_poset(rank, width)?;
    Ok(match are_isomorphic(g, &h, budgets.iso_elements)? {
        Some(f) => Verdict::Holds(BiCmCertificate {
            rank,
            width,
            isomorphism: (0..g.len())
                .map(|x| (g.id(x).to_string(), h.id(f[x]).to_string()))
                .collect(),
        }),
        None => Verdict::Fails(Witness::NotIsomorphic { rank, width }),
    })
}
