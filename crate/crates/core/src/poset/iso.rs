use super::Poset;
use crate::error::{Error, Result};

/// Longest path from a minimal element and to a maximal element.
fn levels(p: &Poset) -> (Vec<usize>, Vec<usize>) {
    let n = p.len();
    let mut height = vec![0; n];
    let mut depth = vec![0; n];
    for &x in p.topological_order() {
        height[x] = p.parents(x).iter().map(|&y| height[y] + 1).max().unwrap_or(0);
    }
    for &x in p.topological_order().iter().rev() {
        depth[x] = p.children(x).iter().map(|&y| depth[y] + 1).max().unwrap_or(0);
    }
    (height, depth)
}

type Signature = (usize, usize, usize, usize);

fn signatures(p: &Poset) -> Vec<Signature> {
    let (h, d) = levels(p);
    (0..p.len())
        .map(|x| (p.parents(x).len(), p.children(x).len(), h[x], d[x]))
        .collect()
}

/// Searches for a bijection `f` with `a <. b` in `p` iff `f(a) <. f(b)` in `q`.
/// Returns `f` as a vector indexed by `p`'s elements. Posets larger than
/// `max_elements` are refused.
pub fn are_isomorphic(p: &Poset, q: &Poset, max_elements: usize) -> Result<Option<Vec<usize>>> {
    if p.len().max(q.len()) > max_elements {
        return Err(Error::budget("isomorphism", max_elements));
    }
    if p.len() != q.len() || p.covers_count() != q.covers_count() {
        return Ok(None);
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    let order = p.topological_order().to_vec();
    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    if assign(p, q, &sp, &sq, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    p: &Poset,
    q: &Poset,
    sp: &[Signature],
    sq: &[Signature],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(k) else {
        return true;
    };
    for y in 0..q.len() {
        if used[y] || sp[x] != sq[y] {
            continue;
        }
        // Parents come earlier in topological order, so they are all mapped.
        // Equal in-degrees plus injectivity make this check two-sided.
        if !p.parents(x).iter().all(|&px| q.is_cover(map[px], y)) {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if assign(p, q, sp, sq, order, k + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, chain, hom_rt_poset, letterplace_poset};

    #[test]
    fn identity_found() {
        let p = hom_rt_poset(2, 3).unwrap();
        let f = are_isomorphic(&p, &p, 24).unwrap().unwrap();
        for (a, b) in p.covers() {
            assert!(p.is_cover(f[a], f[b]));
        }
    }

    #[test]
    fn chain_vs_antichain() {
        let c = chain(3).unwrap();
        let a = antichain(3).unwrap();
        assert_eq!(are_isomorphic(&c, &a, 24).unwrap(), None);
    }

    #[test]
    fn hom_matches_letterplace_of_chain() {
        let h = hom_rt_poset(2, 3).unwrap();
        let l = letterplace_poset(2, &chain(3).unwrap()).unwrap();
        assert!(are_isomorphic(&h, &l, 24).unwrap().is_some());
    }

    #[test]
    fn budget_enforced() {
        let c = chain(30).unwrap();
        assert!(matches!(are_isomorphic(&c, &c, 24), Err(Error::BudgetExceeded { .. })));
    }
}
