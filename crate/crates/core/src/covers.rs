//! Vertex covers of posets: sets meeting every maximal chain.

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexCover {
    pub elements: Mask,
    pub minimal: bool,
}

/// A set containing no maximal chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndependentSet(pub Mask);

/// Minimal transversals of the hypergraph `edges`, in lexicographic order.
///
/// Branches on the first edge missed by the partial transversal: its `k`-th
/// vertex is taken while the earlier ones are excluded, so every candidate is
/// produced once. A branch dies when some chosen vertex has lost all private
/// edges, since privates only shrink as the set grows.
pub fn minimal_transversals(edges: &[Mask], max_vertices: usize) -> Result<Vec<Mask>> {
    let universe = edges.iter().fold(0, |m, &e| m | e);
    if universe.count_ones() as usize > max_vertices {
        return Err(Error::budget("cover enumeration", max_vertices));
    }
    let mut edges = bits::minimalize(edges.to_vec());
    if edges.contains(&0) {
        return Ok(Vec::new());
    }
    edges.sort_by_key(|e| e.count_ones());
    let mut out = Vec::new();
    branch(&edges, 0, 0, &mut out);
    bits::sort_lex(&mut out);
    Ok(out)
}

fn has_private_edges(edges: &[Mask], chosen: Mask) -> bool {
    bits::ones(chosen).all(|v| edges.iter().any(|&e| e & chosen == bits::bit(v)))
}

fn branch(edges: &[Mask], chosen: Mask, excluded: Mask, out: &mut Vec<Mask>) {
    let Some(&e) = edges.iter().find(|&&e| e & chosen == 0) else {
        out.push(chosen);
        return;
    };
    let mut excl = excluded;
    for v in bits::ones(e & !excluded) {
        let next = chosen | bits::bit(v);
        if has_private_edges(edges, next) {
            branch(edges, next, excl, out);
        }
        excl |= bits::bit(v);
    }
}

pub fn is_vertex_cover(p: &Poset, c: Mask) -> bool {
    p.maximal_chain_masks().iter().all(|&m| m & c != 0)
}

/// All minimal vertex covers in lexicographic order.
pub fn minimal_vertex_covers(p: &Poset, budgets: &Budgets) -> Result<Vec<VertexCover>> {
    if p.len() > budgets.cover_enum {
        return Err(Error::budget("cover enumeration", budgets.cover_enum));
    }
    Ok(minimal_transversals(&p.maximal_chain_masks(), budgets.cover_enum)?
        .into_iter()
        .map(|elements| VertexCover {
            elements,
            minimal: true,
        })
        .collect())
}

/// Smallest size of a minimal vertex cover; equals the height of the flag ideal.
pub fn covering_number(p: &Poset, budgets: &Budgets) -> Result<usize> {
    Ok(minimal_vertex_covers(p, budgets)?
        .iter()
        .map(|c| c.elements.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

pub fn height(p: &Poset, budgets: &Budgets) -> Result<usize> {
    covering_number(p, budgets)
}

/// Krull dimension of the quotient by the flag ideal.
pub fn krull_dim(p: &Poset, budgets: &Budgets) -> Result<usize> {
    Ok(p.len() - covering_number(p, budgets)?)
}

/// True iff all minimal vertex covers have one cardinality.
pub fn is_unmixed_bruteforce(p: &Poset, budgets: &Budgets) -> Result<bool> {
    let covers = minimal_vertex_covers(p, budgets)?;
    Ok(covers
        .windows(2)
        .all(|w| w[0].elements.count_ones() == w[1].elements.count_ones()))
}

/// Complements of the minimal vertex covers, in the same order.
pub fn maximal_independent_sets(p: &Poset, budgets: &Budgets) -> Result<Vec<IndependentSet>> {
    Ok(minimal_vertex_covers(p, budgets)?
        .into_iter()
        .map(|c| IndependentSet(p.all() & !c.elements))
        .collect())
}
