//! Ferrers graphs and flag ideals with linear resolutions.

use serde::Serialize;

use super::verdict::{Verdict, Witness};
use crate::bits::{self, Mask};
use crate::poset::{BipartiteLayer, GradedPoset};

/// Orderings of both sides realizing a Ferrers staircase: bottom vertex `p`
/// is adjacent to exactly the first `partition[p]` top vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FerrersOrdering {
    pub bottom: Vec<String>,
    pub top: Vec<String>,
    pub partition: Vec<usize>,
}

/// Two edges `(b1, t1)` and `(b2, t2)` with neither `b1 t2` nor `b2 t1`, as
/// bottom and top indices.
pub(crate) fn find_2k2(adj: &[Mask]) -> Option<[(usize, usize); 2]> {
    for (b1, &n1) in adj.iter().enumerate() {
        for (b2, &n2) in adj.iter().enumerate().skip(b1 + 1) {
            let (only1, only2) = (n1 & !n2, n2 & !n1);
            if only1 != 0 && only2 != 0 {
                return Some([
                    (b1, only1.trailing_zeros() as usize),
                    (b2, only2.trailing_zeros() as usize),
                ]);
            }
        }
    }
    None
}

/// An induced pair of disjoint edges, if there is one.
pub fn has_2k2(l: &BipartiteLayer) -> Option<Witness> {
    two_k2_witness(l, None)
}

fn two_k2_witness(l: &BipartiteLayer, layer: Option<usize>) -> Option<Witness> {
    find_2k2(l.adjacency()).map(|[(b1, t1), (b2, t2)]| Witness::TwoK2 {
        layer,
        edges: [
            (l.bottom()[b1].clone(), l.top()[t1].clone()),
            (l.bottom()[b2].clone(), l.top()[t2].clone()),
        ],
    })
}

fn ferrers_in(l: &BipartiteLayer, layer: Option<usize>) -> Verdict<FerrersOrdering> {
    if let Some(w) = two_k2_witness(l, layer) {
        return Verdict::Fails(w);
    }
    let (ib, it) = l.isolated();
    if let Some(b) = bits::ones(ib).next() {
        return Verdict::Fails(Witness::IsolatedVertex {
            layer,
            vertex: l.bottom()[b].clone(),
        });
    }
    if let Some(t) = bits::ones(it).next() {
        return Verdict::Fails(Witness::IsolatedVertex {
            layer,
            vertex: l.top()[t].clone(),
        });
    }
    // Without an induced 2K2 the neighborhoods are nested, so sorting both
    // sides by degree yields the staircase.
    let mut bottom: Vec<usize> = (0..l.bottom().len()).collect();
    bottom.sort_by_key(|&b| (std::cmp::Reverse(l.neighbors(b).count_ones()), b));
    let mut top: Vec<usize> = (0..l.top().len()).collect();
    top.sort_by_key(|&t| (std::cmp::Reverse(l.top_neighbors(t).count_ones()), t));
    Verdict::Holds(FerrersOrdering {
        partition: bottom.iter().map(|&b| l.neighbors(b).count_ones() as usize).collect(),
        bottom: bottom.iter().map(|&b| l.bottom()[b].clone()).collect(),
        top: top.iter().map(|&t| l.top()[t].clone()).collect(),
    })
}

/// Decides whether a bipartite graph is a Ferrers graph. Isolated vertices
/// are rejected, since a Ferrers graph has its first bottom vertex adjacent
/// to every top vertex and vice versa.
pub fn is_ferrers(l: &BipartiteLayer) -> Verdict<FerrersOrdering> {
    ferrers_in(l, None)
}

/// Decides whether the flag ideal has a linear resolution: the poset is
/// pure and the covers between each pair of consecutive ranks form a Ferrers
/// graph. The certificate lists one staircase per pair of ranks.
pub fn has_linear_resolution_structural(g: &GradedPoset) -> Verdict<Vec<FerrersOrdering>> {
    let r = g.top_rank();
    if let Some(x) = bits::ones(g.maximal()).find(|&x| g.rank(x) < r) {
        return Verdict::Fails(Witness::Impure {
            element: g.id(x).to_string(),
            rank: g.rank(x),
            top_rank: r,
        });
    }
    let mut out = Vec::new();
    for i in 1..r {
        let l = g.bipartite_between(g.layer(i), g.layer(i + 1));
        match ferrers_in(&l, Some(i)) {
            Verdict::Holds(f) => out.push(f),
            Verdict::Fails(w) => return Verdict::Fails(w),
        }
    }
    Verdict::Holds(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budgets;
    use crate::homology::{has_linear_resolution_oracle, FieldSpec};
    use crate::ideals::{flag_ideal, SquarefreeIdeal};
    use crate::poset::{antichain, bipartite_poset, chain, example_3_4, hom_rt_poset, Poset};

    fn graph(code: u32) -> BipartiteLayer {
        let side = |c: char| (0..3).map(|k| format!("{c}{k}")).collect::<Vec<_>>();
        let edges: Vec<(String, String)> = (0..9)
            .filter(|k| code >> k & 1 == 1)
            .map(|k| (format!("x{}", k / 3), format!("y{}", k % 3)))
            .collect();
        BipartiteLayer::new(&side('x'), &side('y'), &edges).unwrap()
    }

    /// The edge ideal of the graph, isolated vertices playing no role.
    fn edge_ideal(l: &BipartiteLayer) -> SquarefreeIdeal {
        let vars: Vec<String> = l.bottom().iter().chain(l.top()).cloned().collect();
        let gens: Vec<[&str; 2]> = l.edge_ids().into_iter().map(|(a, b)| [a, b]).collect();
        SquarefreeIdeal::from_ids(vars, &gens).unwrap()
    }

    fn is_staircase(l: &BipartiteLayer, f: &FerrersOrdering) -> bool {
        f.bottom.iter().zip(&f.partition).all(|(b, &lam)| {
            let bi = l.bottom().iter().position(|x| x == b).unwrap();
            f.top.iter().enumerate().all(|(k, t)| {
                let ti = l.top().iter().position(|x| x == t).unwrap();
                l.has_edge(bi, ti) == (k < lam)
            })
        })
    }

    #[test]
    fn complete_and_two_k2() {
        let k = graph(0b111_111_111);
        let f = is_ferrers(&k);
        assert_eq!(f.certificate().unwrap().partition, [3, 3, 3]);
        let l = BipartiteLayer::new(&["p1", "p2"], &["q1", "q2"], &[("p1", "q1"), ("p2", "q2")]).unwrap();
        let w = Witness::TwoK2 {
            layer: None,
            edges: [("p1".into(), "q1".into()), ("p2".into(), "q2".into())],
        };
        assert_eq!(is_ferrers(&l).witness(), Some(&w));
        assert_eq!(has_2k2(&l), Some(w));
    }

    #[test]
    fn graph_sweep_three_way() {
        let b = Budgets::default();
        for code in 1u32..512 {
            let l = graph(code);
            let (ib, it) = l.isolated();
            let free = has_2k2(&l).is_none();
            let linear = has_linear_resolution_oracle(&edge_ideal(&l), FieldSpec::Gf2, &b).unwrap();
            assert_eq!(free, linear, "code {code}");
            if ib == 0 && it == 0 {
                let f = is_ferrers(&l);
                assert_eq!(f.holds(), free, "code {code}");
                if let Some(c) = f.certificate() {
                    assert!(is_staircase(&l, c));
                }
            } else {
                assert!(!is_ferrers(&l).holds());
            }
        }
    }

    #[test]
    fn poset_sweep_against_oracle() {
        let b = Budgets::default();
        for code in 0u32..512 {
            let g = bipartite_poset(&graph(code)).unwrap();
            let oracle = has_linear_resolution_oracle(&flag_ideal(&g), FieldSpec::Gf2, &b).unwrap();
            assert_eq!(has_linear_resolution_structural(&g).holds(), oracle, "code {code}");
        }
    }

    #[test]
    fn posets() {
        assert!(has_linear_resolution_structural(&hom_rt_poset(3, 2).unwrap()).holds());
        assert!(has_linear_resolution_structural(&chain(3).unwrap()).holds());
        assert!(has_linear_resolution_structural(&antichain(3).unwrap()).holds());
        assert!(!antichain(3).unwrap().is_connected());
        assert!(matches!(
            has_linear_resolution_structural(&example_3_4()).witness(),
            Some(Witness::TwoK2 { layer: Some(_), .. })
        ));
        // Two disjoint chains of length two.
        let p = Poset::new(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let g = GradedPoset::new(p).unwrap();
        assert!(matches!(
            has_linear_resolution_structural(&g).witness(),
            Some(Witness::TwoK2 { .. })
        ));
        let p = Poset::new(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let g = GradedPoset::new(p).unwrap();
        assert!(matches!(
            has_linear_resolution_structural(&g).witness(),
            Some(Witness::Impure { .. })
        ));
    }
}
