use serde::Serialize;

use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::characterize::ChainDecomposition;
use crate::error::{Error, Result};
use crate::poset::GradedPoset;

/// A nested sequence `J_r ⊆ ... ⊆ J_1 = Q` of chain-label sets. `sets[i - 1]`
/// is `J_i`, and `phi[u]` is the largest `i` with `u ∈ J_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Filtration {
    pub sets: Vec<Mask>,
    pub phi: Vec<usize>,
}

impl Filtration {
    fn from_sets(sets: Vec<Mask>, labels: usize) -> Self {
        let phi = (0..labels)
            .map(|u| sets.iter().take_while(|&&s| bits::contains(s, u)).count())
            .collect();
        Filtration { sets, phi }
    }
}

/// Up-sets of the layer orders `Q_{i-1,i}`, in which `a_k <= a_j` iff
/// `a^{i-1}_k` is covered by `a^i_j`. `up[i][k]` is the up-set of `a_k`.
fn layer_orders(g: &GradedPoset, d: &ChainDecomposition) -> Result<Vec<Vec<Mask>>> {
    let r = g.top_rank();
    let t = d.len();
    let mut up = vec![vec![0; t]; r + 1];
    for (i, up_i) in up.iter_mut().enumerate().skip(2) {
        for k in bits::ones(d.labels_at(i)) {
            let x = d.element(i - 1, k).expect("chains reaching rank i pass rank i - 1");
            up_i[k] = g.children(x).iter().fold(0, |m, &y| m | bits::bit(d.label(y)));
        }
        for k in bits::ones(d.labels_at(i)) {
            if !bits::contains(up_i[k], k) {
                return Err(Error::InvalidCertificate(format!("layer order {i} is not reflexive")));
            }
            for j in bits::ones(up_i[k]) {
                if j < k {
                    return Err(Error::InvalidCertificate(format!(
                        "cover between chains {k} and {j} runs against the labeling"
                    )));
                }
                if !bits::is_subset(up_i[j], up_i[k]) {
                    return Err(Error::InvalidCertificate(format!("layer order {i} is not transitive")));
                }
            }
        }
    }
    Ok(up)
}

/// All filtrations `J_r ⊆ ... ⊆ J_1 = Q` with each `J_i ⊆ J_{i-1}` an up-set
/// of `Q_{i-1,i}`, for a decomposition certifying the Cohen-Macaulay
/// conditions. Their monomials are the minimal vertex covers.
pub fn filtrations(g: &GradedPoset, d: &ChainDecomposition, budgets: &Budgets) -> Result<Vec<Filtration>> {
    if d.is_empty() {
        return Ok(Vec::new());
    }
    if !d.is_order_compatible(g) {
        return Err(Error::InvalidCertificate(
            "some cover runs from a later chain to an earlier one".into(),
        ));
    }
    let up = layer_orders(g, d)?;
    let r = g.top_rank();
    let mut out = Vec::new();
    let mut nodes = 0;
    let mut sets = vec![bits::full(d.len())];
    extend(&up, d, r, &mut sets, &mut out, &mut nodes, budgets.matching_nodes)?;
    Ok(out)
}

fn extend(
    up: &[Vec<Mask>],
    d: &ChainDecomposition,
    r: usize,
    sets: &mut Vec<Mask>,
    out: &mut Vec<Filtration>,
    nodes: &mut usize,
    limit: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > limit {
        return Err(Error::budget("filtration enumeration", limit));
    }
    let i = sets.len() + 1;
    if i > r {
        out.push(Filtration::from_sets(sets.clone(), d.len()));
        return Ok(());
    }
    let ground = d.labels_at(i);
    let allowed = sets[i - 2] & ground;
    for s in bits::submasks(allowed) {
        if bits::ones(s).all(|k| bits::is_subset(up[i][k], s)) {
            sets.push(s);
            extend(up, d, r, sets, out, nodes, limit)?;
            sets.pop();
        }
    }
    Ok(())
}

/// The cover `{a_u^{phi(u)}}` attached to a filtration, as an element mask.
pub fn filtration_to_monomial(d: &ChainDecomposition, f: &Filtration) -> Result<Mask> {
    if f.phi.len() != d.len() {
        return Err(Error::InvalidCertificate(
            "filtration and decomposition disagree on labels".into(),
        ));
    }
    f.phi.iter().enumerate().try_fold(0, |m, (u, &i)| {
        d.element(i, u)
            .map(|x| m | bits::bit(x))
            .ok_or_else(|| Error::InvalidCertificate(format!("chain {u} does not reach rank {i}")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::minimal_vertex_covers;
    use crate::poset::{antichain, hom_rt_poset};

    fn check_bijection(g: &GradedPoset, d: &ChainDecomposition) -> usize {
        let b = Budgets::default();
        let fs = filtrations(g, d, &b).unwrap();
        let mut monos: Vec<Mask> = fs.iter().map(|f| filtration_to_monomial(d, f).unwrap()).collect();
        bits::sort_lex(&mut monos);
        let covers: Vec<Mask> = minimal_vertex_covers(g, &b)
            .unwrap()
            .iter()
            .map(|c| c.elements)
            .collect();
        assert_eq!(monos, covers);
        fs.len()
    }

    #[test]
    fn antichain_has_one_filtration() {
        let g = antichain(3).unwrap();
        let d = ChainDecomposition::new(&g, vec![vec![0], vec![1], vec![2]]).unwrap();
        let fs = filtrations(&g, &d, &Budgets::default()).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].sets, [0b111]);
        assert_eq!(filtration_to_monomial(&d, &fs[0]).unwrap(), g.layer(1));
    }

    #[test]
    fn hom_2_2_filtrations() {
        let g = hom_rt_poset(2, 2).unwrap();
        let d = ChainDecomposition::new(&g, vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(check_bijection(&g, &d), 3);
    }

    #[test]
    fn hom_3_3_filtrations() {
        let g = hom_rt_poset(3, 3).unwrap();
        let chains = (0..3).map(|j| vec![j, 3 + j, 6 + j]).collect();
        let d = ChainDecomposition::new(&g, chains).unwrap();
        check_bijection(&g, &d);
    }

    #[test]
    fn reversed_labels_rejected() {
        let g = hom_rt_poset(2, 2).unwrap();
        let d = ChainDecomposition::new(&g, vec![vec![1, 3], vec![0, 2]]).unwrap();
        assert!(matches!(
            filtrations(&g, &d, &Budgets::default()),
            Err(Error::InvalidCertificate(_))
        ));
    }
}
