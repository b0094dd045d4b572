use super::{BipartiteLayer, GradedPoset, Poset};
use crate::error::{Error, Result};

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn graded(ids: Vec<String>, covers: &[(usize, usize)]) -> Result<GradedPoset> {
    GradedPoset::new(Poset::from_indexed(ids, covers)?)
}

fn figure(elements: &str, covers: &str) -> GradedPoset {
    let els: Vec<&str> = elements.split_whitespace().collect();
    let cov: Vec<(&str, &str)> = covers
        .split(',')
        .map(|c| {
            let mut it = c.split_whitespace();
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    GradedPoset::new(Poset::new(&els, &cov).expect("figure poset")).expect("figure is graded")
}

/// The chain `1 < 2 < ... < n`.
pub fn chain(n: usize) -> Result<GradedPoset> {
    positive("n", n)?;
    let ids = (1..=n).map(|i| i.to_string()).collect();
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    graded(ids, &covers)
}

/// `n` pairwise incomparable elements `1, ..., n`.
pub fn antichain(n: usize) -> Result<GradedPoset> {
    positive("n", n)?;
    graded((1..=n).map(|i| i.to_string()).collect(), &[])
}

/// Element id of `(i, q)` in the letterplace poset `[n] x Q`.
pub fn letterplace_id(i: usize, q: &str) -> String {
    format!("x{i}_{q}")
}

/// The poset on `[n] x Q` with covers `(i, q) < (i + 1, q')` for `q <= q'`,
/// whose flag ideal is the letterplace ideal `L(n, Q)`.
pub fn letterplace_poset(n: usize, q: &Poset) -> Result<GradedPoset> {
    positive("n", n)?;
    let m = q.len();
    let ids = (1..=n)
        .flat_map(|i| q.ids().iter().map(move |x| letterplace_id(i, x)))
        .collect();
    let mut covers = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for a in 0..m {
            for b in 0..m {
                if q.leq(a, b) {
                    covers.push((i * m + a, (i + 1) * m + b));
                }
            }
        }
    }
    graded(ids, &covers)
}

/// The poset with elements `a{i}_{j}` (rank `i` in `[r]`, index `j` in `[t]`)
/// and covers `a{i}_{j} < a{i+1}_{j'}` for `j <= j'`; its maximal chains are
/// the isotone maps `[r] -> [t]` and its flag ideal is `L(r, t)`.
pub fn hom_rt_poset(r: usize, t: usize) -> Result<GradedPoset> {
    positive("r", r)?;
    positive("t", t)?;
    let ids = (1..=r)
        .flat_map(|i| (1..=t).map(move |j| format!("a{i}_{j}")))
        .collect();
    let mut covers = Vec::new();
    for i in 0..r - 1 {
        for j in 0..t {
            for k in j..t {
                covers.push((i * t + j, (i + 1) * t + k));
            }
        }
    }
    graded(ids, &covers)
}

/// The V poset with maximal chains `a < b1 < ... < br` and `a < c1 < ... < cs`.
pub fn v_poset(r: usize, s: usize) -> Result<GradedPoset> {
    positive("r", r)?;
    positive("s", s)?;
    let mut ids = vec!["a".to_string()];
    ids.extend((1..=r).map(|k| format!("b{k}")));
    ids.extend((1..=s).map(|k| format!("c{k}")));
    let mut covers = vec![(0, 1), (0, r + 1)];
    covers.extend((1..r).map(|k| (k, k + 1)));
    covers.extend((1..s).map(|k| (r + k, r + k + 1)));
    graded(ids, &covers)
}

/// Element id of `(q, i)` in the co-letterplace poset `Q x [n]`.
pub fn coletterplace_id(q: &str, i: usize) -> String {
    format!("{q}_{i}")
}

/// The poset on `Q x [n]` for the V poset `Q = v_poset(r, s)` whose flag
/// ideal is the co-letterplace ideal `L(Q, n)`:
/// `(a,i) < (b1,j)` and `(bk,i) < (bk+1,j)` for `i <= j`;
/// `(c1,i) < (a,j)` and `(ck,i) < (ck-1,j)` for `j <= i`.
pub fn v_coletterplace_poset(r: usize, s: usize, n: usize) -> Result<GradedPoset> {
    positive("n", n)?;
    let q = v_poset(r, s)?;
    let ids: Vec<String> = q
        .ids()
        .iter()
        .flat_map(|x| (1..=n).map(move |i| coletterplace_id(x, i)))
        .collect();
    let at = |qi: usize, i: usize| qi * n + (i - 1);
    let (a, b, c) = (0, |k: usize| k, |k: usize| r + k);
    let mut covers = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i <= j {
                covers.push((at(a, i), at(b(1), j)));
                for k in 1..r {
                    covers.push((at(b(k), i), at(b(k + 1), j)));
                }
            }
            if j <= i {
                covers.push((at(c(1), i), at(a, j)));
                for k in 2..=s {
                    covers.push((at(c(k), i), at(c(k - 1), j)));
                }
            }
        }
    }
    graded(ids, &covers)
}

/// The rank-2 poset of a bipartite graph: bottom vertices below their top
/// neighbours. Isolated vertices of either side become rank-1 elements.
pub fn bipartite_poset(g: &BipartiteLayer) -> Result<GradedPoset> {
    let nb = g.bottom().len();
    let ids = g.bottom().iter().chain(g.top()).cloned().collect();
    let covers: Vec<_> = g.edges().into_iter().map(|(b, t)| (b, nb + t)).collect();
    graded(ids, &covers)
}

/// The pentagon `a < b < e`, `a < c < d < e`, which has no rank function.
pub fn pentagon() -> Poset {
    Poset::new(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("a", "c"), ("b", "e"), ("c", "d"), ("d", "e")],
    )
    .expect("pentagon")
}

/// Pure rank-3 poset whose two layer posets are unmixed but which is not.
pub fn example_3_4() -> GradedPoset {
    figure(
        "a1 b1 c1 a2 b2 c2 a3 b3 c3",
        "a1 a2, a2 a3, b1 c2, b1 a2, b1 b2, b2 b3, c2 b3, c2 c3, c1 c2",
    )
}

/// Pure rank-3 poset satisfying the weak recombination conditions without
/// being unmixed.
pub fn example_3_6() -> GradedPoset {
    figure(
        "a1 b1 c1 d1 a2 b2 c2 d2 a3 b3 c3 d3",
        "a1 c2, a1 a2, a2 a3, a2 b3, b1 d2, b1 b2, b2 b3, c1 c2, c2 c3, c2 d3, d1 d2, d2 d3",
    )
}

/// Impure rank-4 Cohen-Macaulay poset with 16 elements and 17 maximal chains.
pub fn example_4_9() -> GradedPoset {
    figure(
        "a1 b1 c1 d1 e1 a2 b2 c2 d2 e2 a3 b3 d3 e3 b4 d4",
        "a1 a2, a1 c2, a1 e2, a2 a3, a2 b3, a2 d3, a2 e3, e2 e3, b1 b2, b1 c2, b1 e2, \
         b2 e3, b2 b3, c1 c2, c1 e2, d1 d2, d2 d3, d2 e3, e1 e2, b3 b4, b3 d4, d3 d4",
    )
}
