//! Finite simplicial complexes given by their facets.

use std::collections::HashSet;

use serde::{Serialize, Serializer};

use super::field::{FieldSpec, SignMatrix};
use super::poly::LaurentPoly;
use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::covers::minimal_transversals;
use crate::error::{Error, Result};
use crate::ideals::SquarefreeIdeal;
use crate::poset::{BipartiteLayer, Poset};

/// A simplicial complex on an ordered ground set. The void complex has no
/// facets; the irrelevant complex has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Mask>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            vertices: &'a [String],
            facets: Vec<Vec<&'a str>>,
        }
        Json {
            vertices: &self.vertices,
            facets: self.facet_ids(),
        }
        .serialize(s)
    }
}

impl SimplicialComplex {
    /// The complex generated by `facets`; non-maximal sets are dropped.
    pub fn new(vertices: Vec<String>, facets: Vec<Mask>) -> Result<Self> {
        bits::check_capacity(vertices.len())?;
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateElement(v.clone()));
            }
        }
        let all = bits::full(vertices.len());
        if facets.iter().any(|&f| !bits::is_subset(f, all)) {
            return Err(Error::InvalidParameter("facet uses an undeclared vertex".into()));
        }
        Ok(SimplicialComplex {
            vertices,
            facets: bits::maximalize(facets),
        })
    }

    pub fn void(vertices: Vec<String>) -> Result<Self> {
        SimplicialComplex::new(vertices, Vec::new())
    }

    pub fn irrelevant() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: vec![0],
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Vec<String>) -> Result<Self> {
        let all = bits::full(vertices.len());
        SimplicialComplex::new(vertices, vec![all])
    }

    /// The complex whose minimal non-faces are `nonfaces`.
    pub(crate) fn from_minimal_nonfaces(vertices: Vec<String>, nonfaces: &[Mask], max_vertices: usize) -> Result<Self> {
        let all = bits::full(vertices.len());
        let facets = minimal_transversals(nonfaces, max_vertices)?
            .into_iter()
            .map(|t| all & !t)
            .collect();
        SimplicialComplex::new(vertices, facets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn facet_ids(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|&f| bits::ones(f).map(|k| self.vertices[k].as_str()).collect())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    pub fn contains_face(&self, m: Mask) -> bool {
        self.facets.iter().any(|&f| bits::is_subset(m, f))
    }

    /// Vertices lying in some face.
    pub fn used_vertices(&self) -> Mask {
        self.facets.iter().fold(0, |m, &f| m | f)
    }

    /// Every face, including `∅` unless the complex is void.
    pub fn faces(&self) -> Vec<Mask> {
        let mut seen = HashSet::new();
        for &f in &self.facets {
            seen.extend(bits::submasks(f));
        }
        let mut v: Vec<Mask> = seen.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// True iff some vertex lies in every facet and the complex has one.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(Mask::MAX, |m, &f| m & f) != 0
    }
}

/// Chains of `p` as faces.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    SimplicialComplex::new(p.ids().to_vec(), p.maximal_chain_masks()).expect("chains use poset elements")
}

/// Faces are the variable sets containing no generator support.
pub fn stanley_reisner_complex(i: &SquarefreeIdeal, budgets: &Budgets) -> Result<SimplicialComplex> {
    SimplicialComplex::from_minimal_nonfaces(i.variables().to_vec(), i.generators(), budgets.cover_enum)
}

/// Faces of `x` inside `a`, on the ground set `a`.
pub fn restrict(x: &SimplicialComplex, a: Mask) -> SimplicialComplex {
    let a = a & bits::full(x.vertices.len());
    let keep = bits::to_indices(a);
    let vertices = keep.iter().map(|&k| x.vertices[k].clone()).collect();
    let facets = x.facets.iter().map(|&f| compress(f & a, &keep)).collect();
    SimplicialComplex::new(vertices, facets).expect("restriction of a valid complex")
}

fn compress(m: Mask, keep: &[usize]) -> Mask {
    keep.iter()
        .enumerate()
        .filter(|&(_, &k)| bits::contains(m, k))
        .fold(0, |acc, (j, _)| acc | bits::bit(j))
}

/// Facets are unions of one facet from each side.
pub fn join(x: &SimplicialComplex, y: &SimplicialComplex) -> Result<SimplicialComplex> {
    if let Some(v) = x.vertices.iter().find(|v| y.vertices.contains(v)) {
        return Err(Error::VertexClash(v.clone()));
    }
    let shift = x.vertices.len();
    bits::check_capacity(shift + y.vertices.len())?;
    let vertices = x.vertices.iter().chain(&y.vertices).cloned().collect();
    let facets = x
        .facets
        .iter()
        .flat_map(|&f| y.facets.iter().map(move |&g| f | g << shift))
        .collect();
    SimplicialComplex::new(vertices, facets)
}

/// Join with two new isolated points.
pub fn suspension(x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let fresh = |base: &str| {
        (0..)
            .map(|k| format!("{base}{k}"))
            .find(|c| !x.vertices.contains(c))
            .expect("some name is free")
    };
    let poles = vec![fresh("north"), fresh("south")];
    join(x, &SimplicialComplex::new(poles, vec![0b01, 0b10])?)
}

/// Independence complex of a bipartite layer: bottom vertices, then top.
pub fn independence_complex(l: &BipartiteLayer) -> SimplicialComplex {
    let nb = l.bottom().len();
    let vertices = l.bottom().iter().chain(l.top()).cloned().collect();
    let edges: Vec<Mask> = l
        .edges()
        .into_iter()
        .map(|(b, t)| bits::bit(b) | bits::bit(nb + t))
        .collect();
    SimplicialComplex::from_minimal_nonfaces(vertices, &edges, bits::MAX_ELEMENTS)
        .expect("layer fits the mask capacity")
}

/// The complex on the top side whose faces are the sets `b` with `b ∪ {a}`
/// independent for some bottom vertex `a`. Void when the bottom is empty.
pub fn y_complex(l: &BipartiteLayer) -> SimplicialComplex {
    let all = bits::full(l.top().len());
    let facets = (0..l.bottom().len()).map(|a| all & !l.neighbors(a)).collect();
    SimplicialComplex::new(l.top().to_vec(), facets).expect("top side is a valid ground set")
}

/// `sum_i t^i dim H~^i(x)` over `field`.
pub fn reduced_cohomology_poly(x: &SimplicialComplex, field: FieldSpec) -> LaurentPoly {
    if x.is_void() || x.is_cone() {
        return LaurentPoly::zero();
    }
    cohomology_of_faces(x.faces(), field)
}

/// Reduced cohomology of the complex whose faces are exactly `faces`
/// (closed under subsets; empty for the void complex).
pub(crate) fn cohomology_of_faces(faces: Vec<Mask>, field: FieldSpec) -> LaurentPoly {
    let top = faces.iter().map(|f| f.count_ones() as usize).max();
    let Some(top) = top else {
        return LaurentPoly::zero();
    };
    let mut levels: Vec<Vec<Mask>> = vec![Vec::new(); top + 1];
    for f in faces {
        levels[f.count_ones() as usize].push(f);
    }
    for l in &mut levels {
        l.sort_unstable();
    }
    // ranks[k] is the rank of the boundary from faces of size k to size k - 1.
    let mut ranks = vec![0; top + 2];
    for k in 1..=top {
        let lower = &levels[k - 1];
        let rows = levels[k]
            .iter()
            .map(|&f| {
                bits::ones(f)
                    .enumerate()
                    .map(|(i, v)| {
                        let col = lower
                            .binary_search(&(f & !bits::bit(v)))
                            .expect("faces are closed under subsets");
                        (col, i % 2 == 1)
                    })
                    .collect()
            })
            .collect();
        ranks[k] = SignMatrix {
            cols: lower.len(),
            rows,
        }
        .rank(field);
    }
    let mut out = LaurentPoly::zero();
    for k in 0..=top {
        let dim = levels[k].len() - ranks[k] - ranks[k + 1];
        out.add_term(k as i32 - 1, dim as u64);
    }
    out
}
