//! Squarefree monomial ideals, stored as sets of variable supports.

mod exchange;
mod filtration;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::budget::Budgets;
use crate::covers::minimal_transversals;
use crate::error::{Error, Result};
use crate::poset::{coletterplace_id, letterplace_id, GradedPoset, Poset};

pub use exchange::{has_linear_quotients, is_weakly_polymatroidal, proof_variable_order};
pub use filtration::{filtration_to_monomial, filtrations, Filtration};

/// An ideal generated by squarefree monomials, each given by its support.
/// Generators form a minimal generating set in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct SquarefreeIdeal {
    variables: Vec<String>,
    generators: Vec<Mask>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    variables: Vec<String>,
    generators: Vec<Vec<String>>,
}

impl From<SquarefreeIdeal> for IdealJson {
    fn from(i: SquarefreeIdeal) -> Self {
        let generators = i
            .generator_ids()
            .into_iter()
            .map(|g| g.into_iter().map(String::from).collect())
            .collect();
        IdealJson {
            variables: i.variables,
            generators,
        }
    }
}

impl TryFrom<IdealJson> for SquarefreeIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        SquarefreeIdeal::from_ids(j.variables, &j.generators)
    }
}

impl SquarefreeIdeal {
    /// Builds the ideal generated by `generators`, dropping non-minimal ones.
    pub fn new(variables: Vec<String>, generators: Vec<Mask>) -> Result<Self> {
        bits::check_capacity(variables.len())?;
        let mut seen = HashMap::new();
        for (k, v) in variables.iter().enumerate() {
            if seen.insert(v.as_str(), k).is_some() {
                return Err(Error::DuplicateElement(v.clone()));
            }
        }
        let all = bits::full(variables.len());
        for &g in &generators {
            if g == 0 {
                return Err(Error::UnitIdeal);
            }
            if !bits::is_subset(g, all) {
                return Err(Error::InvalidParameter("generator uses an undeclared variable".into()));
            }
        }
        Ok(SquarefreeIdeal {
            variables,
            generators: bits::minimalize(generators),
        })
    }

    pub fn from_ids<S: AsRef<str>, G: AsRef<[S]>>(variables: Vec<String>, generators: &[G]) -> Result<Self> {
        let index: HashMap<&str, usize> = variables.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect();
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            let mut m = 0;
            for v in g.as_ref() {
                let v = v.as_ref();
                let &k = index.get(v).ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
                m |= bits::bit(k);
            }
            gens.push(m);
        }
        SquarefreeIdeal::new(variables, gens)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Mask] {
        &self.generators
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_index(&self, v: &str) -> Option<usize> {
        self.variables.iter().position(|x| x == v)
    }

    /// Generators as lists of variable ids in variable order.
    pub fn generator_ids(&self) -> Vec<Vec<&str>> {
        self.generators
            .iter()
            .map(|&g| bits::ones(g).map(|k| self.variables[k].as_str()).collect())
            .collect()
    }

    /// The common degree of all generators, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let d = self.generators.first()?.count_ones();
        self.generators
            .iter()
            .all(|g| g.count_ones() == d)
            .then_some(d as usize)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.generators.is_empty() || self.degree().is_some()
    }

    /// Support of all generators.
    pub fn support(&self) -> Mask {
        self.generators.iter().fold(0, |m, &g| m | g)
    }

    /// True iff the monomial with support `m` lies in the ideal.
    pub fn contains(&self, m: Mask) -> bool {
        self.generators.iter().any(|&g| bits::is_subset(g, m))
    }

    /// The same ideal with variables renamed by `f`, which must be injective.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Result<Self> {
        SquarefreeIdeal::new(self.variables.iter().map(|v| f(v)).collect(), self.generators.clone())
    }
}

/// The ideal generated by the maximal chains of `p`.
pub fn flag_ideal(p: &Poset) -> SquarefreeIdeal {
    SquarefreeIdeal::new(p.ids().to_vec(), p.maximal_chain_masks())
        .expect("maximal chains are nonempty and incomparable")
}

/// Flag ideal of the rank selection `P_S`, over the variables of `P_S`.
pub fn partial_flag_ideal(g: &GradedPoset, ranks: &[usize]) -> Result<SquarefreeIdeal> {
    Ok(flag_ideal(g.rank_selection(ranks)?.poset()))
}

/// The ideal generated by the minimal transversals of the generators.
pub fn alexander_dual(i: &SquarefreeIdeal, budgets: &Budgets) -> Result<SquarefreeIdeal> {
    let gens = minimal_transversals(&i.generators, budgets.cover_enum)?;
    if gens.contains(&0) {
        return Err(Error::UnitIdeal);
    }
    SquarefreeIdeal::new(i.variables.clone(), gens)
}

fn drop_bit(m: Mask, k: usize) -> Mask {
    let low = m & (bits::bit(k) - 1);
    let high = (m >> (k + 1)) << k;
    low | high
}

/// Sets variable `v` to 1: removes it from every generator and from the ring.
pub fn evaluate_to_one(i: &SquarefreeIdeal, v: &str) -> Result<SquarefreeIdeal> {
    let k = i
        .variable_index(v)
        .ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
    let mut variables = i.variables.clone();
    variables.remove(k);
    let gens = i.generators.iter().map(|&g| drop_bit(g, k)).collect();
    SquarefreeIdeal::new(variables, gens)
}

/// The letterplace ideal `L(n, Q)`: one generator `x_(1,q1) ... x_(n,qn)` per
/// multichain `q1 <= ... <= qn` of `Q`.
pub fn letterplace_generators(n: usize, q: &Poset) -> Result<SquarefreeIdeal> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let m = q.len();
    bits::check_capacity(n * m)?;
    let variables = (1..=n)
        .flat_map(|i| q.ids().iter().map(move |x| letterplace_id(i, x)))
        .collect();
    let mut gens = Vec::new();
    let mut stack: Vec<(usize, usize, Mask)> = (0..m).map(|a| (1, a, bits::bit(a))).collect();
    while let Some((len, last, mask)) = stack.pop() {
        if len == n {
            gens.push(mask);
            continue;
        }
        for b in 0..m {
            if q.leq(last, b) {
                stack.push((len + 1, b, mask | bits::bit(len * m + b)));
            }
        }
    }
    SquarefreeIdeal::new(variables, gens)
}

/// Checks that `q` has one minimal element and exactly two maximal chains.
fn check_v_poset(q: &Poset) -> Result<()> {
    let mins = q.minimal().count_ones();
    if mins != 1 {
        return Err(Error::NotAVPoset(format!("{mins} minimal elements")));
    }
    let chains = q.maximal_chains().len();
    if chains != 2 {
        return Err(Error::NotAVPoset(format!("{chains} maximal chains")));
    }
    Ok(())
}

/// The co-letterplace ideal `L(Q, n)` of a V poset: one generator
/// `prod_q x_(q, phi(q))` per isotone map `phi: Q -> [n]`.
pub fn v_coletterplace_generators(q: &Poset, n: usize) -> Result<SquarefreeIdeal> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    check_v_poset(q)?;
    bits::check_capacity(n * q.len())?;
    let variables = q
        .ids()
        .iter()
        .flat_map(|x| (1..=n).map(move |i| coletterplace_id(x, i)))
        .collect();
    let order = q.topological_order().to_vec();
    let mut phi = vec![0usize; q.len()];
    let mut gens = Vec::new();
    isotone_maps(q, &order, 0, n, &mut phi, &mut gens);
    SquarefreeIdeal::new(variables, gens)
}

fn isotone_maps(q: &Poset, order: &[usize], k: usize, n: usize, phi: &mut [usize], out: &mut Vec<Mask>) {
    let Some(&x) = order.get(k) else {
        out.push((0..q.len()).fold(0, |m, y| m | bits::bit(y * n + phi[y] - 1)));
        return;
    };
    let lo = q.parents(x).iter().map(|&y| phi[y]).max().unwrap_or(1);
    for v in lo..=n {
        phi[x] = v;
        isotone_maps(q, order, k + 1, n, phi, out);
    }
}
