//! One-stop classification of a poset: every structural test next to its
//! homological oracle.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::Budgets;
use crate::characterize::{
    check_cm_structural, check_unmixed_structural, check_weak_conditions, has_linear_resolution_structural, is_bi_cm,
    BiCmCertificate, ChainDecompositionIds, FerrersOrdering, Verdict,
};
use crate::covers::minimal_vertex_covers;
use crate::error::{Error, Result};
use crate::homology::{cm_oracle_report, has_linear_resolution_oracle, CmOracleReport, FieldSpec};
use crate::ideals::flag_ideal;
use crate::poset::{GradedPoset, Poset};

/// What to compute besides the structural tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub field: FieldSpec,
    /// Run the homological oracles (full Betti tables) and the
    /// minimal-vertex-cover enumeration.
    pub oracles: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            field: FieldSpec::Gf2,
            oracles: true,
        }
    }
}

/// A structural verdict and, when computed, the oracle's answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assessment<C> {
    pub structural: Verdict<C>,
    pub oracle: Option<bool>,
}

impl<C> Assessment<C> {
    /// False only when the oracle ran and disagrees.
    pub fn agrees(&self) -> bool {
        self.oracle.is_none_or(|o| o == self.structural.holds())
    }
}

/// Unmixedness and linear-resolution tests of the poset on two consecutive
/// ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    pub ranks: [usize; 2],
    pub unmixed: bool,
    pub cohen_macaulay: bool,
    pub ferrers: bool,
}

/// The weak recombination conditions, where the recombined chain may use
/// any elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeakConditions {
    pub same_rank: bool,
    pub maximal_end: bool,
}

/// Sizes of the minimal vertex covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverSummary {
    pub count: usize,
    /// Cover size to number of minimal covers of that size.
    pub sizes: BTreeMap<usize, usize>,
}

/// Everything but `graded` and `elements` is `null` for a poset without a
/// rank function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub elements: usize,
    pub graded: bool,
    pub field: FieldSpec,
    pub rank: Option<usize>,
    pub layer_sizes: Option<Vec<usize>>,
    pub pure: Option<bool>,
    pub connected: Option<bool>,
    pub generators: Option<usize>,
    pub minimal_vertex_covers: Option<CoverSummary>,
    pub unmixed: Option<Assessment<ChainDecompositionIds>>,
    pub weak_conditions: Option<WeakConditions>,
    pub cm: Option<Assessment<ChainDecompositionIds>>,
    pub cm_oracle_details: Option<CmOracleReport>,
    pub linear_resolution: Option<Assessment<Vec<FerrersOrdering>>>,
    pub bi_cm: Option<Verdict<BiCmCertificate>>,
    pub layers: Option<Vec<LayerReport>>,
    /// Properties on which a structural test and its oracle disagree.
    pub disagreements: Vec<String>,
}

fn layer_reports(g: &GradedPoset, budgets: &Budgets) -> Result<Vec<LayerReport>> {
    (1..g.top_rank())
        .map(|i| {
            let sub = g.rank_selection(&[i, i + 1])?;
            let ferrers = has_linear_resolution_structural(&sub).holds();
            Ok(LayerReport {
                ranks: [i, i + 1],
                unmixed: check_unmixed_structural(&sub, budgets)?.holds(),
                cohen_macaulay: check_cm_structural(&sub, budgets)?.holds(),
                ferrers,
            })
        })
        .collect()
}

/// Classifies `p`. Budget exhaustion in any part is returned as an error.
pub fn classify(p: &Poset, options: ClassifyOptions, budgets: &Budgets) -> Result<ClassificationReport> {
    let mut report = ClassificationReport {
        elements: p.len(),
        graded: false,
        field: options.field,
        rank: None,
        layer_sizes: None,
        pure: None,
        connected: None,
        generators: None,
        minimal_vertex_covers: None,
        unmixed: None,
        weak_conditions: None,
        cm: None,
        cm_oracle_details: None,
        linear_resolution: None,
        bi_cm: None,
        layers: None,
        disagreements: Vec::new(),
    };
    let Some(g) = p.rank_function() else {
        return Ok(report);
    };
    let ideal = flag_ideal(&g);
    report.graded = true;
    report.rank = Some(g.top_rank());
    report.layer_sizes = Some(g.layer_sizes());
    report.pure = Some(g.is_pure());
    report.connected = Some(g.is_connected());
    report.generators = Some(ideal.generators().len());

    let (mut unmixed_oracle, mut cm_oracle, mut linear_oracle) = (None, None, None);
    if options.oracles {
        let covers = minimal_vertex_covers(&g, budgets)?;
        let mut sizes = BTreeMap::new();
        for c in &covers {
            *sizes.entry(c.elements.count_ones() as usize).or_insert(0) += 1;
        }
        unmixed_oracle = Some(sizes.len() <= 1);
        report.minimal_vertex_covers = Some(CoverSummary {
            count: covers.len(),
            sizes,
        });
        let details = cm_oracle_report(&ideal, options.field, budgets)?;
        cm_oracle = Some(details.eagon_reiner);
        report.cm_oracle_details = Some(details);
        linear_oracle = Some(has_linear_resolution_oracle(&ideal, options.field, budgets)?);
    }

    let to_ids = |v: Verdict<_>| v.map(|d: crate::characterize::ChainDecomposition| d.to_ids(&g));
    let unmixed = Assessment {
        structural: to_ids(check_unmixed_structural(&g, budgets)?),
        oracle: unmixed_oracle,
    };
    let cm = Assessment {
        structural: to_ids(check_cm_structural(&g, budgets)?),
        oracle: cm_oracle,
    };
    let linear = Assessment {
        structural: has_linear_resolution_structural(&g),
        oracle: linear_oracle,
    };
    for (name, ok) in [
        ("unmixed", unmixed.agrees()),
        ("cm", cm.agrees()),
        ("linear_resolution", linear.agrees()),
    ] {
        if !ok {
            report.disagreements.push(name.to_string());
        }
    }
    report.weak_conditions = match check_weak_conditions(&g, budgets) {
        Ok((same_rank, maximal_end)) => Some(WeakConditions { same_rank, maximal_end }),
        Err(Error::NoChainDecomposition) => None,
        Err(e) => return Err(e),
    };
    report.unmixed = Some(unmixed);
    report.cm = Some(cm);
    report.linear_resolution = Some(linear);
    report.bi_cm = Some(is_bi_cm(&g, budgets)?);
    report.layers = Some(layer_reports(&g, budgets)?);
    Ok(report)
}
