//! Small-set helpers. Element and variable sets are stored as `u64` masks
//! over an index space fixed by the owning structure, which caps every
//! poset, ideal and complex at [`MAX_ELEMENTS`] points.

use std::cmp::Ordering;

use crate::error::{Error, Result};

pub type Mask = u64;

pub const MAX_ELEMENTS: usize = 64;

pub(crate) fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::CapacityExceeded {
            limit: MAX_ELEMENTS,
            got: n,
        });
    }
    Ok(())
}

#[inline]
pub fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(m: Mask, i: usize) -> bool {
    m >> i & 1 == 1
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Mask {
    it.into_iter().fold(0, |m, i| m | bit(i))
}

/// Iterates the set bits of `m` in increasing order.
pub fn ones(m: Mask) -> Ones {
    Ones(m)
}

pub struct Ones(Mask);

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ones {}

pub fn to_indices(m: Mask) -> Vec<usize> {
    ones(m).collect()
}

/// Iterates every submask of `m`, including `m` and the empty mask.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut cur = Some(m);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 { None } else { Some((s - 1) & m) };
        Some(s)
    })
}

/// Lexicographic order on the increasing index sequences of two masks.
pub fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    let mut x = ones(a);
    let mut y = ones(b);
    loop {
        match (x.next(), y.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(i), Some(j)) if i != j => return i.cmp(&j),
            _ => {}
        }
    }
}

pub fn sort_lex(v: &mut [Mask]) {
    v.sort_by(|a, b| lex_cmp(*a, *b));
}

/// Keeps only the inclusion-minimal masks, deduplicated and in lex order.
pub fn minimalize(mut v: Vec<Mask>) -> Vec<Mask> {
    v.sort_by_key(|m| m.count_ones());
    v.dedup();
    let mut keep: Vec<Mask> = Vec::with_capacity(v.len());
    for m in v {
        if !keep.iter().any(|&k| is_subset(k, m)) {
            keep.push(m);
        }
    }
    sort_lex(&mut keep);
    keep
}

/// Keeps only the inclusion-maximal masks, deduplicated and in lex order.
pub fn maximalize(mut v: Vec<Mask>) -> Vec<Mask> {
    v.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    v.dedup();
    let mut keep: Vec<Mask> = Vec::with_capacity(v.len());
    for m in v {
        if !keep.iter().any(|&k| is_subset(m, k)) {
            keep.push(m);
        }
    }
    sort_lex(&mut keep);
    keep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_count() {
        assert_eq!(submasks(0b1011).count(), 8);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn lex_order_is_on_index_sequences() {
        // {0,3} < {1} because 0 < 1
        assert_eq!(lex_cmp(0b1001, 0b0010), Ordering::Less);
        // {0} is a prefix of {0,1}
        assert_eq!(lex_cmp(0b01, 0b11), Ordering::Less);
    }

    #[test]
    fn minimalize_drops_supersets() {
        assert_eq!(minimalize(vec![0b111, 0b011, 0b100, 0b011]), vec![0b011, 0b100]);
    }

    #[test]
    fn maximalize_drops_subsets() {
        assert_eq!(maximalize(vec![0b011, 0b001, 0b100, 0b011, 0]), vec![0b011, 0b100]);
        assert_eq!(maximalize(vec![0]), vec![0]);
    }
}
