//! CSV and human-readable text renderings of command results.

use std::fmt::Write;

use flagideal::homology::BettiTable;
use flagideal::report::{Assessment, ClassificationReport};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn optional(b: Option<bool>) -> String {
    b.map_or_else(|| "n/a".to_string(), |b| yes_no(b).to_string())
}

fn oracle_note<C>(a: &Assessment<C>) -> String {
    match a.oracle {
        Some(o) => format!(" (oracle: {})", yes_no(o)),
        None => String::new(),
    }
}

/// One `property,structural,oracle` row per property; empty cells where a
/// value was not computed.
pub fn classification_csv(r: &ClassificationReport) -> String {
    let cell = |b: Option<bool>| b.map_or_else(String::new, |b| b.to_string());
    let mut out = String::from("property,structural,oracle\n");
    let mut row = |name: &str, s: Option<bool>, o: Option<bool>| {
        writeln!(out, "{name},{},{}", cell(s), cell(o)).expect("writing to a string");
    };
    row("graded", Some(r.graded), None);
    row("pure", r.pure, None);
    row("connected", r.connected, None);
    row(
        "unmixed",
        r.unmixed.as_ref().map(|a| a.structural.holds()),
        r.unmixed.as_ref().and_then(|a| a.oracle),
    );
    row(
        "cohen_macaulay",
        r.cm.as_ref().map(|a| a.structural.holds()),
        r.cm.as_ref().and_then(|a| a.oracle),
    );
    row(
        "linear_resolution",
        r.linear_resolution.as_ref().map(|a| a.structural.holds()),
        r.linear_resolution.as_ref().and_then(|a| a.oracle),
    );
    row("bi_cohen_macaulay", r.bi_cm.as_ref().map(|v| v.holds()), None);
    out
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let line = |w: &mut String, label: &str, value: String| {
        writeln!(w, "{label:<20}{value}").expect("writing to a string");
    };
    line(w, "elements", r.elements.to_string());
    line(w, "graded", yes_no(r.graded).to_string());
    if !r.graded {
        return out;
    }
    line(w, "field", r.field.to_string());
    line(w, "rank", r.rank.map_or_else(String::new, |x| x.to_string()));
    if let Some(sizes) = &r.layer_sizes {
        let s: Vec<String> = sizes.iter().map(ToString::to_string).collect();
        line(w, "layer sizes", s.join(" "));
    }
    line(w, "pure", optional(r.pure));
    line(w, "connected", optional(r.connected));
    line(
        w,
        "generators",
        r.generators.map_or_else(String::new, |x| x.to_string()),
    );
    if let Some(c) = &r.minimal_vertex_covers {
        let sizes: Vec<String> = c.sizes.iter().map(|(size, n)| format!("{n} of size {size}")).collect();
        line(w, "minimal covers", format!("{} ({})", c.count, sizes.join(", ")));
    }
    if let Some(a) = &r.unmixed {
        line(
            w,
            "unmixed",
            format!("{}{}", yes_no(a.structural.holds()), oracle_note(a)),
        );
    }
    if let Some(wc) = &r.weak_conditions {
        line(
            w,
            "weak conditions",
            format!(
                "same rank {}, maximal end {}",
                yes_no(wc.same_rank),
                yes_no(wc.maximal_end)
            ),
        );
    }
    if let Some(a) = &r.cm {
        line(
            w,
            "cohen-macaulay",
            format!("{}{}", yes_no(a.structural.holds()), oracle_note(a)),
        );
    }
    if let Some(d) = &r.cm_oracle_details {
        line(w, "projdim / height", format!("{} / {}", d.projdim, d.height));
    }
    if let Some(a) = &r.linear_resolution {
        line(
            w,
            "linear resolution",
            format!("{}{}", yes_no(a.structural.holds()), oracle_note(a)),
        );
    }
    line(w, "bi-cohen-macaulay", optional(r.bi_cm.as_ref().map(|v| v.holds())));
    for l in r.layers.iter().flatten() {
        line(
            w,
            &format!("ranks {}-{}", l.ranks[0], l.ranks[1]),
            format!(
                "unmixed {}, cm {}, ferrers {}",
                yes_no(l.unmixed),
                yes_no(l.cohen_macaulay),
                yes_no(l.ferrers)
            ),
        );
    }
    if !r.disagreements.is_empty() {
        line(w, "disagreements", r.disagreements.join(", "));
    }
    out
}

/// Total Betti numbers, then each nonzero `beta_{j,A}`.
pub fn betti_table_text(t: &BettiTable) -> String {
    let mut out = String::new();
    let totals: Vec<String> = t.totals().iter().map(ToString::to_string).collect();
    writeln!(out, "field {}; totals by j: {}", t.field(), totals.join(" ")).expect("writing to a string");
    for e in t.entries() {
        let mut ids: Vec<&str> = flagideal::bits::ones(e.multidegree)
            .map(|k| t.variables()[k].as_str())
            .collect();
        ids.sort_unstable();
        writeln!(out, "beta_{},{{{}}} = {}", e.j, ids.join(", "), e.beta).expect("writing to a string");
    }
    out
}

/// `j,beta` for one multidegree.
pub fn betti_row_csv(betti: &[u64]) -> String {
    let mut out = String::from("j,beta\n");
    for (j, b) in betti.iter().enumerate() {
        writeln!(out, "{j},{b}").expect("writing to a string");
    }
    out
}

pub fn covers_csv(covers: &[Vec<&str>]) -> String {
    let mut out = String::from("size,cover\n");
    for c in covers {
        writeln!(out, "{},{}", c.len(), c.join(";")).expect("writing to a string");
    }
    out
}

pub fn covers_text(covers: &[Vec<&str>]) -> String {
    let mut out = String::new();
    for c in covers {
        writeln!(out, "{{{}}}", c.join(", ")).expect("writing to a string");
    }
    out
}

pub fn mapping_csv(mapping: Option<&[(&str, &str)]>) -> String {
    let mut out = String::from("first,second\n");
    for (a, b) in mapping.unwrap_or_default() {
        writeln!(out, "{a},{b}").expect("writing to a string");
    }
    out
}

pub fn mapping_text(mapping: Option<&[(&str, &str)]>) -> String {
    match mapping {
        None => "not isomorphic\n".to_string(),
        Some(m) => {
            let mut out = String::from("isomorphic\n");
            for (a, b) in m {
                writeln!(out, "{a} -> {b}").expect("writing to a string");
            }
            out
        }
    }
}
