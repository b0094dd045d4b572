//! Finite posets given by their Hasse diagram.

mod builders;
mod graded;
mod iso;
pub mod text;

use std::collections::{HashMap, HashSet};
use std::ops::Deref;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};

pub use builders::{
    antichain, bipartite_poset, chain, coletterplace_id, example_3_4, example_3_6, example_4_9, hom_rt_poset,
    letterplace_id, letterplace_poset, pentagon, v_coletterplace_poset, v_poset,
};
pub use graded::{BipartiteLayer, GradedPoset};
pub use iso::are_isomorphic;

/// A chain of element indices, strictly increasing in the poset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain(pub Vec<usize>);

impl Chain {
    pub fn mask(&self) -> Mask {
        bits::from_indices(self.0.iter().copied())
    }

    pub fn ids<'a>(&self, p: &'a Poset) -> Vec<&'a str> {
        self.0.iter().map(|&i| p.id(i)).collect()
    }
}

impl Deref for Chain {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// A finite poset. Elements keep their input order, which every enumeration
/// in the crate uses as its tie-breaker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    children: Vec<Vec<usize>>,
    parents: Vec<Vec<usize>>,
    /// Strict up-sets.
    above: Vec<Mask>,
    topo: Vec<usize>,
}

pub(crate) fn valid_id(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Poset {
    /// Validates a Hasse diagram. Covers must be irredundant: a cover implied
    /// by a longer path is rejected rather than reduced.
    pub fn new<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let ids: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if !valid_id(id) {
                return Err(Error::InvalidParameter(format!("invalid element id `{id}`")));
            }
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateElement(id.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (p, q) in covers {
            pairs.push((lookup(p.as_ref())?, lookup(q.as_ref())?));
        }
        Self::from_parts(ids, index, &pairs)
    }

    pub(crate) fn from_indexed(ids: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateElement(id.clone()));
            }
        }
        Self::from_parts(ids, index, covers)
    }

    fn from_parts(ids: Vec<String>, index: HashMap<String, usize>, covers: &[(usize, usize)]) -> Result<Poset> {
        bits::check_capacity(ids.len())?;
        let n = ids.len();
        let mut children = vec![Vec::new(); n];
        let mut parents = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(covers.len());
        for &(p, q) in covers {
            if p == q {
                return Err(Error::CycleDetected(ids[p].clone()));
            }
            if !seen.insert((p, q)) {
                return Err(Error::DuplicateCover(ids[p].clone(), ids[q].clone()));
            }
            children[p].push(q);
            parents[q].push(p);
        }
        for v in children.iter_mut().chain(parents.iter_mut()) {
            v.sort_unstable();
        }

        // Kahn's algorithm, smallest index first
        let mut indeg: Vec<usize> = parents.iter().map(Vec::len).collect();
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(p) = ready.pop_first() {
            topo.push(p);
            for &c in &children[p] {
                indeg[c] -= 1;
                if indeg[c] == 0 {
                    ready.insert(c);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::CycleDetected(ids[stuck].clone()));
        }

        let mut above = vec![0 as Mask; n];
        for &p in topo.iter().rev() {
            let mut m = 0;
            for &c in &children[p] {
                m |= bits::bit(c) | above[c];
            }
            above[p] = m;
        }
        for p in 0..n {
            for &q in &children[p] {
                if children[p].iter().any(|&c| bits::contains(above[c], q)) {
                    return Err(Error::RedundantCover(ids[p].clone(), ids[q].clone()));
                }
            }
        }

        Ok(Poset {
            ids,
            index,
            children,
            parents,
            above,
            topo,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn mask_of<S: AsRef<str>>(&self, ids: &[S]) -> Result<Mask> {
        ids.iter().try_fold(0, |m, s| {
            self.index_of(s.as_ref())
                .map(|i| m | bits::bit(i))
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        })
    }

    pub fn ids_of(&self, m: Mask) -> Vec<&str> {
        bits::ones(m).map(|i| self.id(i)).collect()
    }

    pub fn all(&self) -> Mask {
        bits::full(self.len())
    }

    pub fn children(&self, p: usize) -> &[usize] {
        &self.children[p]
    }

    pub fn parents(&self, p: usize) -> &[usize] {
        &self.parents[p]
    }

    pub fn children_mask(&self, p: usize) -> Mask {
        bits::from_indices(self.children[p].iter().copied())
    }

    /// Cover pairs `(p, q)` with `q` covering `p`, ordered by `(p, q)` index.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |p| self.children[p].iter().map(move |&q| (p, q)))
    }

    pub fn covers_count(&self) -> usize {
        self.children.iter().map(Vec::len).sum()
    }

    pub fn is_cover(&self, p: usize, q: usize) -> bool {
        self.children[p].binary_search(&q).is_ok()
    }

    pub fn lt(&self, p: usize, q: usize) -> bool {
        bits::contains(self.above[p], q)
    }

    pub fn leq(&self, p: usize, q: usize) -> bool {
        p == q || self.lt(p, q)
    }

    pub fn strictly_above(&self, p: usize) -> Mask {
        self.above[p]
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn minimal(&self) -> Mask {
        bits::from_indices((0..self.len()).filter(|&i| self.parents[i].is_empty()))
    }

    pub fn maximal(&self) -> Mask {
        bits::from_indices((0..self.len()).filter(|&i| self.children[i].is_empty()))
    }

    /// All maximal chains: saturated chains from a minimal to a maximal
    /// element, in lexicographic order of their index sequences.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for s in bits::ones(self.minimal()) {
            self.extend_to_maximal(s, &mut path, &mut out);
        }
        out.sort();
        out
    }

    fn extend_to_maximal(&self, p: usize, path: &mut Vec<usize>, out: &mut Vec<Chain>) {
        path.push(p);
        if self.children[p].is_empty() {
            out.push(Chain(path.clone()));
        } else {
            for &c in &self.children[p] {
                self.extend_to_maximal(c, path, out);
            }
        }
        path.pop();
    }

    /// Supports of all maximal chains.
    pub fn maximal_chain_masks(&self) -> Vec<Mask> {
        self.maximal_chains().iter().map(Chain::mask).collect()
    }

    /// Saturated chains from `p` to `q`, in lexicographic order.
    pub fn saturated_chains_between(&self, p: usize, q: usize) -> Vec<Chain> {
        let mut out = Vec::new();
        if p == q || !self.lt(p, q) {
            return out;
        }
        let mut path = vec![p];
        self.walk_to(q, &mut path, &mut out);
        out
    }

    fn walk_to(&self, q: usize, path: &mut Vec<usize>, out: &mut Vec<Chain>) {
        let last = *path.last().unwrap();
        if last == q {
            out.push(Chain(path.clone()));
            return;
        }
        for &c in &self.children[last] {
            if c == q || self.lt(c, q) {
                path.push(c);
                self.walk_to(q, path, out);
                path.pop();
            }
        }
    }

    /// Connected components of the Hasse diagram as element masks, ordered by
    /// their smallest element.
    pub fn component_masks(&self) -> Vec<Mask> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut mask = 0;
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(p) = stack.pop() {
                mask |= bits::bit(p);
                for &x in self.children[p].iter().chain(&self.parents[p]) {
                    if comp[x] == usize::MAX {
                        comp[x] = id;
                        stack.push(x);
                    }
                }
            }
            out.push(mask);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Poset> {
        self.component_masks().into_iter().map(|m| self.induced(m)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// Induced subposet on `mask` with the order restricted and the Hasse
    /// diagram recomputed. Element order follows the parent poset.
    pub fn induced(&self, mask: Mask) -> Poset {
        let keep = bits::to_indices(mask);
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut covers = Vec::new();
        for &p in &keep {
            let up = self.above[p] & mask;
            for q in bits::ones(up) {
                // q covers p in the restriction iff nothing kept lies strictly between
                let between = bits::ones(up).any(|z| z != q && self.lt(z, q));
                if !between {
                    covers.push((pos[&p], pos[&q]));
                }
            }
        }
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        Poset::from_indexed(ids, &covers).expect("restriction of a valid order is a valid Hasse diagram")
    }

    /// The unique rank function, if one exists.
    pub fn rank_function(&self) -> Option<GradedPoset> {
        GradedPoset::new(self.clone()).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(els: &[&str], covers: &[(&str, &str)]) -> Result<Poset> {
        Poset::new(els, covers)
    }

    #[test]
    fn two_chain() {
        let p = poset(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(p.lt(0, 1));
        assert_eq!(p.maximal_chains(), vec![Chain(vec![0, 1])]);
    }

    #[test]
    fn cycle_rejected() {
        assert!(matches!(
            poset(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::CycleDetected(_))
        ));
        assert!(matches!(poset(&["a"], &[("a", "a")]), Err(Error::CycleDetected(_))));
    }

    #[test]
    fn redundant_cover_rejected() {
        let r = poset(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(r, Err(Error::RedundantCover("a".into(), "c".into())));
    }

    #[test]
    fn unknown_and_duplicates() {
        assert_eq!(poset(&["a"], &[("a", "z")]), Err(Error::UnknownElement("z".into())));
        assert_eq!(poset(&["a", "a"], &[]), Err(Error::DuplicateElement("a".into())));
        assert_eq!(
            poset(&["a", "b"], &[("a", "b"), ("a", "b")]),
            Err(Error::DuplicateCover("a".into(), "b".into()))
        );
    }

    #[test]
    fn pentagon_is_valid_but_not_graded() {
        let p = pentagon();
        assert_eq!(p.len(), 5);
        assert!(p.rank_function().is_none());
    }

    #[test]
    fn saturated_chains_of_adjacent_and_incomparable() {
        let p = poset(&["a", "b", "c"], &[("a", "b")]).unwrap();
        assert_eq!(p.saturated_chains_between(0, 1), vec![Chain(vec![0, 1])]);
        assert!(p.saturated_chains_between(0, 2).is_empty());
    }

    #[test]
    fn components_of_two_chains() {
        let p = poset(&["a", "b", "c", "d", "e"], &[("a", "b"), ("c", "d"), ("d", "e")]).unwrap();
        let comps = p.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps.iter().map(Poset::len).sum::<usize>(), 5);
        assert_eq!(comps[1].ids(), ["c", "d", "e"]);
    }

    #[test]
    fn example_3_6_is_connected() {
        assert!(example_3_6().is_connected());
        assert_eq!(example_3_6().component_masks().len(), 1);
    }

    #[test]
    fn induced_recomputes_hasse_diagram() {
        let p = chain(4).unwrap();
        let sub = p.induced(0b1001);
        assert_eq!(sub.covers().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
