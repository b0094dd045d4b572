//! Betti polynomials of flag ideals from the bipartite layers of a
//! multidegree, without touching the full Stanley-Reisner complex.

use super::complex::{independence_complex, reduced_cohomology_poly, SimplicialComplex};
use super::field::FieldSpec;
use super::poly::LaurentPoly;
use crate::bits::{self, Mask};
use crate::poset::GradedPoset;

/// `B_i`: all of `A_i` at the bottom and top ranks, and the non-maximal part
/// of `A_i` in between.
fn b_part(g: &GradedPoset, a: Mask, i: usize) -> Mask {
    let ai = a & g.layer(i);
    if i == 1 || i == g.top_rank() {
        ai
    } else {
        ai & !g.maximal()
    }
}

/// `X_1(A), ..., X_{r-1}(A)`: the independence complexes of the cover graphs
/// between `B_i` and `A_{i+1}`.
pub fn x_complexes(g: &GradedPoset, a: Mask) -> Vec<SimplicialComplex> {
    (1..g.top_rank())
        .map(|i| {
            let layer = g.bipartite_between(b_part(g, a, i), a & g.layer(i + 1));
            independence_complex(&layer)
        })
        .collect()
}

/// `beta(A, t)` of the flag ideal as `t^r prod_i H~(X_i(A), t)`.
///
/// Rank-1 maximal elements are isolated points whose variables are
/// generators on their own. They are not vertices of the restricted
/// Stanley-Reisner complex, so they leave `beta(A, t)` unchanged and are
/// removed first; a multidegree made of them alone has `beta(A, t) = t`.
pub fn betti_polynomial_fast(g: &GradedPoset, a: Mask, field: FieldSpec) -> LaurentPoly {
    let a = a & g.all();
    if a == 0 {
        return LaurentPoly::zero();
    }
    let rest = a & !(g.layer(1) & g.maximal());
    if rest == 0 {
        return LaurentPoly::monomial(1, 1);
    }
    x_complexes(g, rest)
        .iter()
        .fold(LaurentPoly::monomial(g.top_rank() as i32, 1), |acc, x| {
            if acc.is_zero() {
                acc
            } else {
                acc.mul(&reduced_cohomology_poly(x, field))
            }
        })
}

/// Whether `A` lies in the first linear strand, where `s` is the smallest
/// rank of a maximal element: `A` sits in ranks `1..=s` with `A_s` maximal,
/// meets every such rank, and each `B_i ∪ A_{i+1}` with `i < s` is a complete
/// bipartite graph under the covers.
pub fn in_first_strand(g: &GradedPoset, a: Mask) -> bool {
    let s = g.min_max_rank();
    if s == 0 || !bits::is_subset(a, g.ranks_mask(1..=s)) {
        return false;
    }
    if !bits::is_subset(a & g.layer(s), g.maximal()) {
        return false;
    }
    if (1..=s).any(|i| a & g.layer(i) == 0) {
        return false;
    }
    (1..s).all(|i| g.bipartite_between(b_part(g, a, i), a & g.layer(i + 1)).is_complete())
}
