use std::collections::HashSet;

use super::SquarefreeIdeal;
use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::characterize::ChainDecomposition;
use crate::error::{Error, Result};
use crate::poset::GradedPoset;

/// Ordered exchange property for squarefree generators. `order` lists the
/// variable indices as `x_1, ..., x_n`, so `x_1` is compared first: whenever
/// generators `m1`, `m2` first differ at `x_t` with `x_t | m1`, some `x_s`
/// with `s > t` divides `m2` and `x_t m2 / x_s` is a generator.
pub fn is_weakly_polymatroidal(i: &SquarefreeIdeal, order: &[usize]) -> Result<bool> {
    if !i.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let n = i.num_variables();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::InvalidParameter(
            "variable order must list every variable exactly once".into(),
        ));
    }
    let gens: HashSet<Mask> = i.generators().iter().copied().collect();
    for &m1 in i.generators() {
        for &m2 in i.generators() {
            let diff = m1 ^ m2;
            if diff == 0 {
                continue;
            }
            let t = order
                .iter()
                .position(|&v| bits::contains(diff, v))
                .expect("generators differ");
            let xt = bits::bit(order[t]);
            if m1 & xt == 0 {
                continue;
            }
            let exchange = order[t + 1..]
                .iter()
                .map(|&s| bits::bit(s))
                .any(|xs| m2 & xs != 0 && gens.contains(&(m2 & !xs | xt)));
            if !exchange {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Variables of a decomposed graded poset listed from largest to smallest,
/// where `a^i_j > a^k_l` iff `i > k`, or `i = k` and `j > l`.
pub fn proof_variable_order(g: &GradedPoset, d: &ChainDecomposition) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse((g.rank(x), d.label(x))));
    order
}

/// True iff the colon `(g_1, ..., g_{k-1}) : g_k` is generated by variables.
/// For squarefree monomials it is generated by the supports `g_j \ g_k`.
fn linear_colon(gens: &[Mask], placed: &[usize], c: Mask) -> bool {
    let linear = placed
        .iter()
        .map(|&j| gens[j] & !c)
        .filter(|m| m.count_ones() == 1)
        .fold(0, |a, m| a | m);
    placed.iter().all(|&j| gens[j] & !c & linear != 0)
}

/// An order of the generators (as indices into `i.generators()`) with
/// linear quotients, found by depth-first search that tries the candidate
/// sharing most variables with the placed generators first. Failed sets of
/// placed generators are remembered, since success depends only on the set.
pub fn has_linear_quotients(i: &SquarefreeIdeal, budgets: &Budgets) -> Result<Option<Vec<usize>>> {
    if !i.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let gens = i.generators();
    let mut search = Search {
        gens,
        placed: Vec::new(),
        used: vec![false; gens.len()],
        failed: HashSet::new(),
        nodes: 0,
        limit: budgets.quotient_nodes,
    };
    Ok(search.run()?.then_some(search.placed))
}

struct Search<'a> {
    gens: &'a [Mask],
    placed: Vec<usize>,
    used: Vec<bool>,
    failed: HashSet<Vec<bool>>,
    nodes: usize,
    limit: usize,
}

impl Search<'_> {
    fn run(&mut self) -> Result<bool> {
        if self.placed.len() == self.gens.len() {
            return Ok(true);
        }
        if self.failed.contains(&self.used) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::budget("linear quotients search", self.limit));
        }
        let mut candidates: Vec<(u32, usize)> = (0..self.gens.len())
            .filter(|&c| !self.used[c] && linear_colon(self.gens, &self.placed, self.gens[c]))
            .map(|c| {
                let overlap = self
                    .placed
                    .iter()
                    .map(|&j| (self.gens[j] & self.gens[c]).count_ones())
                    .max()
                    .unwrap_or(0);
                (overlap, c)
            })
            .collect();
        candidates.sort_by_key(|&(o, c)| (std::cmp::Reverse(o), c));
        for (_, c) in candidates {
            self.placed.push(c);
            self.used[c] = true;
            if self.run()? {
                return Ok(true);
            }
            self.placed.pop();
            self.used[c] = false;
        }
        self.failed.insert(self.used.clone());
        Ok(false)
    }
}
