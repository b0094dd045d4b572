//! Unmixedness of graded posets from layer matchings and chain
//! recombination.

use std::collections::BTreeMap;

use super::decomposition::ChainDecomposition;
use super::matching::left_perfect_matching;
use super::verdict::{Verdict, Witness};
use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::poset::GradedPoset;

fn ids(g: &GradedPoset, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| g.id(x).to_string()).collect()
}

/// Disjoint maximal chains covering `g`, assembled from perfect matchings
/// between the non-maximal elements of each rank and the next rank. Chains
/// are ordered by length, longest first, so the chains reaching rank `i` get
/// the labels `0..|P_i|`.
pub(crate) fn matched_decomposition(g: &GradedPoset) -> Result<Verdict<ChainDecomposition>> {
    let r = g.top_rank();
    for i in 1..r {
        let (lower, upper) = (g.layer(i).count_ones() as usize, g.layer(i + 1).count_ones() as usize);
        if lower < upper {
            return Ok(Verdict::Fails(Witness::ShrinkingLayers { rank: i, lower, upper }));
        }
    }
    let mut up = vec![usize::MAX; g.len()];
    for i in 1..r {
        let bottom = bits::to_indices(g.trimmed_layer(i));
        let top = bits::to_indices(g.layer(i + 1));
        if bottom.len() != top.len() {
            return Ok(Verdict::Fails(Witness::UnbalancedLayer {
                rank: i,
                non_maximal: bottom.len(),
                upper: top.len(),
            }));
        }
        let adj: Vec<Mask> = top
            .iter()
            .map(|&y| bits::from_indices((0..bottom.len()).filter(|&k| g.is_cover(bottom[k], y))))
            .collect();
        match left_perfect_matching(&adj, bottom.len()) {
            Ok(mate) => {
                for (k, &y) in top.iter().enumerate() {
                    up[bottom[mate[k]]] = y;
                }
            }
            Err((s, ns)) => {
                return Ok(Verdict::Fails(Witness::HallViolation {
                    rank: Some(i),
                    elements: ids(g, bits::ones(s).map(|k| top[k])),
                    neighbors: ids(g, bits::ones(ns).map(|k| bottom[k])),
                }));
            }
        }
    }
    let mut chains: Vec<Vec<usize>> = bits::ones(g.layer(1))
        .map(|x| {
            let (mut c, mut y) = (vec![x], x);
            while up[y] != usize::MAX {
                y = up[y];
                c.push(y);
            }
            c
        })
        .collect();
    chains.sort_by_key(|c| std::cmp::Reverse(c.len()));
    Ok(Verdict::Holds(ChainDecomposition::new(g, chains)?))
}

/// The recombination conditions on pairs of saturated chains, in the strong
/// form (the recombined chain must stay inside the two given chains) or the
/// weak form (it may use any elements).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Recombination {
    /// A chain `a^i_u -> a^j_v` and a chain `a^i_v -> a^j_w`.
    SameRank,
    /// A chain `a^i_u -> a^k_v` with `k > j` and a chain `a^i_v -> a^j_w`
    /// ending at a maximal element.
    MaximalEnd,
}

impl Recombination {
    fn name(self, weak: bool) -> String {
        let base = match self {
            Recombination::SameRank => "3",
            Recombination::MaximalEnd => "4",
        };
        if weak {
            format!("{base}'")
        } else {
            base.to_string()
        }
    }
}

fn children_of(g: &GradedPoset, m: Mask) -> Mask {
    bits::ones(m).fold(0, |acc, x| acc | g.children_mask(x))
}

/// Whether a saturated chain of `steps` covers leads from `from` to `to`
/// with every inner element in `allowed`.
fn chain_within(g: &GradedPoset, from: usize, to: usize, steps: usize, allowed: Mask) -> bool {
    let mut frontier = bits::bit(from);
    for _ in 1..steps {
        frontier = children_of(g, frontier) & allowed;
    }
    bits::contains(children_of(g, frontier), to)
}

/// Saturated chains of `steps` covers starting at `x`.
fn up_paths(g: &GradedPoset, x: usize, steps: usize) -> Vec<Vec<usize>> {
    fn go(g: &GradedPoset, path: &mut Vec<usize>, steps: usize, out: &mut Vec<Vec<usize>>) {
        if path.len() == steps + 1 {
            out.push(path.clone());
            return;
        }
        for &c in g.children(path[path.len() - 1]) {
            path.push(c);
            go(g, path, steps, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![x], steps, &mut out);
    out
}

fn inner(c: &[usize]) -> Mask {
    if c.len() < 2 {
        return 0;
    }
    bits::from_indices(c[1..c.len() - 1].iter().copied())
}

/// Checks one recombination condition against the labels of `d`. Returns
/// the first violating chain pair.
pub(crate) fn recombination_witness(
    g: &GradedPoset,
    d: &ChainDecomposition,
    cond: Recombination,
    weak: bool,
    budgets: &Budgets,
) -> Result<Option<Witness>> {
    let r = g.top_rank();
    let mut pairs = 0usize;
    let mut tick = || -> Result<()> {
        pairs += 1;
        if pairs > budgets.chain_pairs {
            return Err(Error::budget("chain pairs", budgets.chain_pairs));
        }
        Ok(())
    };
    let witness = |first: &[usize], second: &[usize]| Witness::ChainPair {
        condition: cond.name(weak),
        first: ids(g, first.iter().copied()),
        second: ids(g, second.iter().copied()),
    };
    for i in 1..=r {
        for j in i + 1..=r {
            let steps = j - i;
            let below_j = g.ranks_mask(i + 1..j);
            for xu in bits::ones(g.layer(i)) {
                for xv in bits::ones(g.layer(i)) {
                    if xu == xv {
                        continue;
                    }
                    let v = d.label(xv);
                    let chain_v = &d.chains()[v];
                    // Inner parts (ranks i+1..j-1) of the first chains, keyed by
                    // their inner set, with one representative chain each.
                    let mut firsts: BTreeMap<Mask, Vec<usize>> = BTreeMap::new();
                    match cond {
                        Recombination::SameRank => {
                            if let Some(t) = d.element(j, v) {
                                for c in g.saturated_chains_between(xu, t) {
                                    firsts.entry(inner(&c)).or_insert_with(|| c.0.clone());
                                }
                            }
                        }
                        Recombination::MaximalEnd => {
                            for &t in chain_v.iter().skip(j) {
                                for c in g.saturated_chains_between(xu, t) {
                                    firsts.entry(inner(&c) & below_j).or_insert_with(|| c.0.clone());
                                }
                            }
                        }
                    }
                    if firsts.is_empty() {
                        continue;
                    }
                    let seconds: Vec<Vec<usize>> = up_paths(g, xv, steps)
                        .into_iter()
                        .filter(|c| cond == Recombination::SameRank || bits::contains(g.maximal(), c[steps]))
                        .collect();
                    for b in &seconds {
                        let z = b[steps];
                        if weak {
                            tick()?;
                            if !g.lt(xu, z) {
                                let a = firsts.values().next().map(Vec::as_slice).unwrap_or(&[]);
                                return Ok(Some(witness(a, b)));
                            }
                            continue;
                        }
                        for (&a_inner, a) in &firsts {
                            tick()?;
                            if !chain_within(g, xu, z, steps, a_inner | inner(b)) {
                                return Ok(Some(witness(a, b)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Decides unmixedness of a graded poset: the rank sizes weakly decrease,
/// each rank's non-maximal elements match perfectly onto the next rank, and
/// both recombination conditions hold for the resulting chains. The
/// certificate is the decomposition into disjoint maximal chains.
pub fn check_unmixed_structural(g: &GradedPoset, budgets: &Budgets) -> Result<Verdict<ChainDecomposition>> {
    let d = match matched_decomposition(g)? {
        Verdict::Holds(d) => d,
        fails => return Ok(fails),
    };
    for cond in [Recombination::SameRank, Recombination::MaximalEnd] {
        if let Some(w) = recombination_witness(g, &d, cond, false, budgets)? {
            return Ok(Verdict::Fails(w));
        }
    }
    Ok(Verdict::Holds(d))
}

/// The weak recombination conditions, where the recombined chain may use
/// any elements of the poset, evaluated on the matched decomposition.
/// Returns whether the weak forms of the same-rank and maximal-end
/// conditions hold.
pub fn check_weak_conditions(g: &GradedPoset, budgets: &Budgets) -> Result<(bool, bool)> {
    let d = match matched_decomposition(g)? {
        Verdict::Holds(d) => d,
        Verdict::Fails(_) => return Err(Error::NoChainDecomposition),
    };
    let three = recombination_witness(g, &d, Recombination::SameRank, true, budgets)?.is_none();
    let four = recombination_witness(g, &d, Recombination::MaximalEnd, true, budgets)?.is_none();
    Ok((three, four))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::is_unmixed_bruteforce;
    use crate::poset::{
        antichain, bipartite_poset, chain, example_3_4, example_3_6, example_4_9, hom_rt_poset, BipartiteLayer, Poset,
    };

    fn verdict(g: &GradedPoset) -> Verdict<ChainDecomposition> {
        check_unmixed_structural(g, &Budgets::default()).unwrap()
    }

    #[test]
    fn chains_and_antichains_are_unmixed() {
        for n in 1..5 {
            let d = verdict(&chain(n).unwrap());
            assert_eq!(d.certificate().unwrap().len(), 1);
            assert!(verdict(&antichain(n).unwrap()).holds());
        }
    }

    #[test]
    fn example_3_4_fails_a_recombination_condition() {
        let g = example_3_4();
        match verdict(&g) {
            Verdict::Fails(Witness::ChainPair { condition, .. }) => assert_eq!(condition, "3"),
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn example_3_6_weak_but_not_strong() {
        let g = example_3_6();
        assert!(!verdict(&g).holds());
        assert_eq!(check_weak_conditions(&g, &Budgets::default()).unwrap(), (true, true));
    }

    #[test]
    fn example_4_9_and_hom_posets_are_unmixed() {
        let d = verdict(&example_4_9());
        assert_eq!(d.certificate().unwrap().len(), 5);
        for r in 1..=3 {
            for t in 1..=3 {
                assert!(verdict(&hom_rt_poset(r, t).unwrap()).holds());
            }
        }
    }

    #[test]
    fn nested_labels() {
        let g = example_4_9();
        let d = verdict(&g).certificate().unwrap().clone();
        for i in 1..=g.top_rank() {
            let t = g.layer(i).count_ones() as usize;
            assert_eq!(d.labels_at(i), bits::full(t));
        }
    }

    #[test]
    fn unbalanced_layer_witness() {
        // Two minimal elements below one maximal element.
        let p = Poset::new(&["x", "y", "z"], &[("x", "z"), ("y", "z")]).unwrap();
        let g = GradedPoset::new(p).unwrap();
        assert!(!is_unmixed_bruteforce(&g, &Budgets::default()).unwrap());
        assert_eq!(
            verdict(&g).witness(),
            Some(&Witness::UnbalancedLayer {
                rank: 1,
                non_maximal: 2,
                upper: 1
            })
        );
        assert!(matches!(
            check_weak_conditions(&g, &Budgets::default()),
            Err(Error::NoChainDecomposition)
        ));
    }

    #[test]
    fn shrinking_and_hall_witnesses() {
        let p = Poset::new(&["x", "y", "z"], &[("x", "y"), ("x", "z")]).unwrap();
        let g = GradedPoset::new(p).unwrap();
        assert!(matches!(
            verdict(&g).witness(),
            Some(Witness::ShrinkingLayers { rank: 1, .. })
        ));
        // Two upper elements sharing their only parent, next to a lone edge.
        let l = BipartiteLayer::new(
            &["a", "b", "c"],
            &["p", "q", "s"],
            &[("a", "p"), ("a", "q"), ("b", "s"), ("c", "s")],
        )
        .unwrap();
        let g = bipartite_poset(&l).unwrap();
        match verdict(&g).witness() {
            Some(Witness::HallViolation {
                elements, neighbors, ..
            }) => {
                assert!(neighbors.len() < elements.len());
            }
            w => panic!("unexpected {w:?}"),
        }
    }

    #[test]
    fn agrees_with_brute_force_on_small_bipartite_posets() {
        for code in 0u32..512 {
            let edges: Vec<(String, String)> = (0..9)
                .filter(|k| code >> k & 1 == 1)
                .map(|k| (format!("b{}", k / 3), format!("t{}", k % 3)))
                .collect();
            let side = |c: char| (0..3).map(|k| format!("{c}{k}")).collect::<Vec<_>>();
            let l = BipartiteLayer::new(&side('b'), &side('t'), &edges).unwrap();
            let g = bipartite_poset(&l).unwrap();
            let b = Budgets::default();
            assert_eq!(
                verdict(&g).holds(),
                is_unmixed_bruteforce(&g, &b).unwrap(),
                "code {code}"
            );
        }
    }
}
