//! Multigraded Betti numbers of squarefree ideals via Hochster's formula
//! `beta_{j,A}(I) = dim H~^{|A|-j-2}(Delta_I|_A)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::complex::cohomology_of_faces;
use super::fast::betti_polynomial_fast;
use super::field::FieldSpec;
use super::poly::LaurentPoly;
use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::ideals::{alexander_dual, SquarefreeIdeal};
use crate::poset::GradedPoset;

/// `H~(Delta_I|_A, t)` for generator supports `gens`. A vertex of `A` outside
/// every generator inside `A` is a cone point, and then the result is zero.
fn restriction_cohomology(gens: &[Mask], a: Mask, field: FieldSpec) -> LaurentPoly {
    let inside: Vec<Mask> = gens.iter().copied().filter(|&g| bits::is_subset(g, a)).collect();
    if inside.iter().fold(0, |m, &g| m | g) != a {
        return LaurentPoly::zero();
    }
    let faces = bits::submasks(a)
        .filter(|&s| !inside.iter().any(|&g| bits::is_subset(g, s)))
        .collect();
    cohomology_of_faces(faces, field)
}

fn check_multidegree(i: &SquarefreeIdeal, a: Mask, budgets: &Budgets) -> Result<()> {
    if !bits::is_subset(a, bits::full(i.num_variables())) {
        return Err(Error::InvalidParameter(
            "multidegree uses an undeclared variable".into(),
        ));
    }
    if a.count_ones() as usize > budgets.betti_vars {
        return Err(Error::budget("Betti multidegree size", budgets.betti_vars));
    }
    Ok(())
}

/// `[beta_{0,A}, ..., beta_{|A|-1,A}]` of `i`.
pub fn betti_multidegree(i: &SquarefreeIdeal, a: Mask, field: FieldSpec, budgets: &Budgets) -> Result<Vec<u64>> {
    check_multidegree(i, a, budgets)?;
    let n = a.count_ones() as i32;
    let h = restriction_cohomology(i.generators(), a, field);
    Ok((0..n).map(|j| h.coefficient(n - j - 2)).collect())
}

/// `beta(A, t) = sum_j t^{|A| - j} beta_{j,A}`, computed by brute force.
pub fn betti_polynomial(i: &SquarefreeIdeal, a: Mask, field: FieldSpec, budgets: &Budgets) -> Result<LaurentPoly> {
    check_multidegree(i, a, budgets)?;
    if a == 0 {
        return Ok(LaurentPoly::zero());
    }
    Ok(restriction_cohomology(i.generators(), a, field).shift(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiEntry {
    pub j: usize,
    pub multidegree: Mask,
    pub beta: u64,
}

/// Nonzero `beta_{j,A}(I)`, ordered by `j`, then `|A|`, then `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    variables: Vec<String>,
    field: FieldSpec,
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    fn from_map(variables: Vec<String>, field: FieldSpec, map: BTreeMap<(usize, Mask), u64>) -> Self {
        let mut entries: Vec<BettiEntry> = map
            .into_iter()
            .filter(|&(_, b)| b > 0)
            .map(|((j, multidegree), beta)| BettiEntry { j, multidegree, beta })
            .collect();
        entries.sort_by(|x, y| {
            (x.j, x.multidegree.count_ones())
                .cmp(&(y.j, y.multidegree.count_ones()))
                .then(bits::lex_cmp(x.multidegree, y.multidegree))
        });
        BettiTable {
            variables,
            field,
            entries,
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn get(&self, j: usize, a: Mask) -> u64 {
        self.entries
            .iter()
            .find(|e| e.j == j && e.multidegree == a)
            .map_or(0, |e| e.beta)
    }

    /// `sum_A beta_{j,A}` for `j = 0, 1, ...`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.iter().map(|e| e.j + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for e in &self.entries {
            out[e.j] += e.beta;
        }
        out
    }

    /// Projective dimension of `R/I`: one more than the largest `j` present.
    pub fn projdim_quotient(&self) -> usize {
        self.entries.iter().map(|e| e.j + 1).max().unwrap_or(0)
    }

    /// True iff every entry has `|A| = j + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries
            .iter()
            .all(|e| e.multidegree.count_ones() as usize == e.j + d)
    }

    fn ids(&self, a: Mask) -> Vec<&str> {
        let mut ids: Vec<&str> = bits::ones(a).map(|k| self.variables[k].as_str()).collect();
        ids.sort_unstable();
        ids
    }

    /// Columns `j,|A|,A,beta` with `A` as sorted ids joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,|A|,A,beta\n");
        for e in &self.entries {
            writeln!(
                out,
                "{},{},{},{}",
                e.j,
                e.multidegree.count_ones(),
                self.ids(e.multidegree).join(";"),
                e.beta
            )
            .expect("writing to a string");
        }
        out
    }

    /// The same table over another ordering of the same variables.
    pub fn reindex(&self, variables: &[String]) -> Result<BettiTable> {
        let pos: Vec<usize> = self
            .variables
            .iter()
            .map(|v| {
                variables
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        let map = self
            .entries
            .iter()
            .map(|e| {
                let a = bits::ones(e.multidegree).fold(0, |m, k| m | bits::bit(pos[k]));
                ((e.j, a), e.beta)
            })
            .collect();
        Ok(BettiTable::from_map(variables.to_vec(), self.field, map))
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            j: usize,
            multidegree: Vec<&'a str>,
            beta: u64,
        }
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|e| Entry {
                j: e.j,
                multidegree: self.ids(e.multidegree),
                beta: e.beta,
            })
            .collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("variables", &self.variables)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Every nonzero `beta_{j,A}(I)`. Only unions of generators can carry one,
/// since any other restriction is a cone.
pub fn full_betti_table(i: &SquarefreeIdeal, field: FieldSpec, budgets: &Budgets) -> Result<BettiTable> {
    let support = i.support();
    if support.count_ones() as usize > budgets.betti_vars {
        return Err(Error::budget("Betti table variables", budgets.betti_vars));
    }
    let mut map = BTreeMap::new();
    for a in bits::submasks(support) {
        if a == 0 {
            continue;
        }
        let h = restriction_cohomology(i.generators(), a, field);
        let n = a.count_ones() as i32;
        for (k, c) in h.terms() {
            let j = n - k - 2;
            if j >= 0 {
                map.insert((j as usize, a), c);
            }
        }
    }
    Ok(BettiTable::from_map(i.variables().to_vec(), field, map))
}

/// Every nonzero `beta_{j,A}` of the flag ideal of `g`, read off the
/// layerwise Betti polynomials `beta(A, t) = sum_j t^{|A| - j} beta_{j,A}`.
pub fn fast_betti_table(g: &GradedPoset, field: FieldSpec, budgets: &Budgets) -> Result<BettiTable> {
    if g.len() > budgets.betti_vars {
        return Err(Error::budget("Betti table variables", budgets.betti_vars));
    }
    let mut map = BTreeMap::new();
    for a in bits::submasks(g.all()) {
        let n = a.count_ones() as i32;
        for (k, c) in betti_polynomial_fast(g, a, field).terms() {
            map.insert(((n - k) as usize, a), c);
        }
    }
    Ok(BettiTable::from_map(g.ids().to_vec(), field, map))
}

/// Betti table of `I_1 + ... + I_m` for ideals in pairwise disjoint variables.
/// Convolves the tables of the quotients `R/I_k`, whose entries are
/// `beta_{0,∅} = 1` and `beta_{j+1,A}(R/I) = beta_{j,A}(I)`.
pub fn component_betti_assembly(tables: &[BettiTable]) -> Result<BettiTable> {
    let field = tables.first().map_or(FieldSpec::default(), |t| t.field);
    if tables.iter().any(|t| t.field != field) {
        return Err(Error::InvalidParameter("tables are over different fields".into()));
    }
    let mut variables: Vec<String> = Vec::new();
    let mut acc: BTreeMap<(usize, Mask), u64> = BTreeMap::from([((0, 0), 1)]);
    for t in tables {
        if let Some(v) = t.variables.iter().find(|v| variables.contains(v)) {
            return Err(Error::VariableClash(v.clone()));
        }
        let shift = variables.len();
        bits::check_capacity(shift + t.variables.len())?;
        variables.extend(t.variables.iter().cloned());
        let mut quotient = vec![(0, 0, 1)];
        quotient.extend(t.entries.iter().map(|e| (e.j + 1, e.multidegree << shift, e.beta)));
        let mut next = BTreeMap::new();
        for (&(j, a), &x) in &acc {
            for &(k, b, y) in &quotient {
                *next.entry((j + k, a | b)).or_insert(0) += x * y;
            }
        }
        acc = next;
    }
    let map = acc
        .into_iter()
        .filter(|&((j, _), _)| j > 0)
        .map(|((j, a), b)| ((j - 1, a), b))
        .collect();
    Ok(BettiTable::from_map(variables, field, map))
}

/// True iff `i` is generated in one degree `d` and every `beta_{j,A}` has `|A| = j + d`.
pub fn has_linear_resolution_oracle(i: &SquarefreeIdeal, field: FieldSpec, budgets: &Budgets) -> Result<bool> {
    let Some(d) = i.degree() else {
        return Ok(i.generators().is_empty());
    };
    Ok(full_betti_table(i, field, budgets)?.is_linear(d))
}

/// Homological Cohen-Macaulay test: the Alexander dual has a linear resolution.
pub fn is_cm_oracle(i: &SquarefreeIdeal, field: FieldSpec, budgets: &Budgets) -> Result<bool> {
    Ok(cm_oracle_report(i, field, budgets)?.eagon_reiner)
}

/// Both homological Cohen-Macaulay criteria: linearity of the dual's
/// resolution, and `projdim(R/I)` against the height of `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CmOracleReport {
    pub eagon_reiner: bool,
    pub projdim: usize,
    pub height: usize,
}

impl CmOracleReport {
    pub fn projdim_equals_height(&self) -> bool {
        self.projdim == self.height
    }
}

pub fn cm_oracle_report(i: &SquarefreeIdeal, field: FieldSpec, budgets: &Budgets) -> Result<CmOracleReport> {
    let dual = alexander_dual(i, budgets)?;
    let height = dual
        .generators()
        .iter()
        .map(|g| g.count_ones() as usize)
        .min()
        .unwrap_or(0);
    Ok(CmOracleReport {
        eagon_reiner: has_linear_resolution_oracle(&dual, field, budgets)?,
        projdim: full_betti_table(i, field, budgets)?.projdim_quotient(),
        height,
    })
}
