//! Acceptance suite: every structural test against an independent oracle on
//! exhaustive and seeded corpora. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use flagideal::bits::{self, Mask};
use flagideal::characterize::{
    check_cm_structural, check_unmixed_structural, check_weak_conditions, has_2k2, has_linear_resolution_structural,
    is_bi_cm, is_ferrers, ChainDecomposition,
};
use flagideal::covers::{is_unmixed_bruteforce, minimal_vertex_covers};
use flagideal::homology::{
    betti_polynomial, betti_polynomial_fast, full_betti_table, has_linear_resolution_oracle, in_first_strand,
    is_cm_oracle, FieldSpec,
};
use flagideal::ideals::{
    alexander_dual, filtration_to_monomial, filtrations, flag_ideal, has_linear_quotients, is_weakly_polymatroidal,
    proof_variable_order, SquarefreeIdeal,
};
use flagideal::poset::{
    are_isomorphic, bipartite_poset, chain, example_3_4, example_3_6, example_4_9, hom_rt_poset, pentagon,
    v_coletterplace_poset, v_poset,
};
use flagideal::random::random_specs;
use flagideal::{BipartiteLayer, Budgets, GradedPoset, LaurentPoly};

type Check = std::result::Result<String, String>;
type Criterion<'a> = Box<dyn Fn() -> Check + 'a>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn core<T>(r: flagideal::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

const GF32003: FieldSpec = FieldSpec::Gfp(32003);
const MAX_MULTIDEGREE: u32 = 10;

/// The bipartite graph on `x0 x1 x2 | y0 y1 y2` whose edge `(x_i, y_j)` is
/// bit `3i + j` of `code`.
fn graph(code: u32) -> BipartiteLayer {
    let side = |c: char| (0..3).map(|k| format!("{c}{k}")).collect::<Vec<_>>();
    let edges: Vec<(String, String)> = (0..9)
        .filter(|k| code >> k & 1 == 1)
        .map(|k| (format!("x{}", k / 3), format!("y{}", k % 3)))
        .collect();
    BipartiteLayer::new(&side('x'), &side('y'), &edges).expect("valid graph")
}

/// The graph with its isolated vertices deleted.
fn without_isolated(l: &BipartiteLayer) -> BipartiteLayer {
    let (ib, it) = l.isolated();
    let keep_top: Vec<usize> = (0..l.top().len()).filter(|&t| !bits::contains(it, t)).collect();
    let keep_bottom: Vec<usize> = (0..l.bottom().len()).filter(|&b| !bits::contains(ib, b)).collect();
    let adj = keep_bottom
        .iter()
        .map(|&b| {
            keep_top
                .iter()
                .enumerate()
                .filter(|&(_, &t)| l.has_edge(b, t))
                .fold(0, |m, (k, _)| m | bits::bit(k))
        })
        .collect();
    BipartiteLayer::from_adjacency(
        keep_bottom.iter().map(|&b| l.bottom()[b].clone()).collect(),
        keep_top.iter().map(|&t| l.top()[t].clone()).collect(),
        adj,
    )
}

fn edge_ideal(l: &BipartiteLayer) -> SquarefreeIdeal {
    let vars: Vec<String> = l.bottom().iter().chain(l.top()).cloned().collect();
    let gens: Vec<[&str; 2]> = l.edge_ids().into_iter().map(|(a, b)| [a, b]).collect();
    SquarefreeIdeal::from_ids(vars, &gens).expect("valid edge ideal")
}

fn corpus_a() -> Vec<(String, GradedPoset)> {
    (0u32..512)
        .map(|code| {
            (
                format!("graph {code:09b}"),
                bipartite_poset(&graph(code)).expect("graded"),
            )
        })
        .collect()
}

/// At least 200 seeded random graded posets with at most 12 elements and
/// rank 2 to 4, plus the named families within the same bounds.
fn corpus_b() -> Vec<(String, GradedPoset)> {
    let mut out: Vec<(String, GradedPoset)> = random_specs(200, 20_240_601, 2, 4, 12)
        .expect("valid sampling parameters")
        .into_iter()
        .map(|s| {
            (
                format!("random {:?} q={} seed={}", s.widths, s.edge_probability, s.seed),
                s.generate().expect("valid spec"),
            )
        })
        .collect();
    let mut named = vec![
        ("example 3.4".to_string(), example_3_4()),
        ("example 3.6".to_string(), example_3_6()),
        ("example 4.9".to_string(), example_4_9()),
    ];
    for r in 1..=4 {
        for t in 1..=4 {
            named.push((format!("hom({r},{t})"), hom_rt_poset(r, t).unwrap()));
        }
        named.push((format!("chain({r})"), chain(r).unwrap()));
        for s in 1..=4 {
            named.push((format!("V({r},{s})"), v_poset(r, s).unwrap()));
            for n in 1..=3 {
                named.push((format!("V^{n}({r},{s})"), v_coletterplace_poset(r, s, n).unwrap()));
            }
        }
    }
    out.extend(
        named
            .into_iter()
            .filter(|(_, g)| g.len() <= 12 && (2..=4).contains(&g.top_rank())),
    );
    out
}

/// Every multidegree of `g` with at most `MAX_MULTIDEGREE` elements.
fn multidegrees(g: &GradedPoset) -> impl Iterator<Item = Mask> {
    bits::submasks(g.all()).filter(|a| *a != 0 && a.count_ones() <= MAX_MULTIDEGREE)
}

/// Structural and oracle verdicts for unmixedness, Cohen-Macaulayness and
/// linear resolutions.
fn equivalences(corpus: &[(String, GradedPoset)], field: FieldSpec, b: &Budgets) -> Check {
    for (name, g) in corpus {
        let i = flag_ideal(g);
        let unmixed = core(check_unmixed_structural(g, b))?.holds();
        ensure!(
            unmixed == core(is_unmixed_bruteforce(g, b))?,
            "{name}: unmixed structural {unmixed} against covers"
        );
        let cm = core(check_cm_structural(g, b))?.holds();
        ensure!(
            cm == core(is_cm_oracle(&i, field, b))?,
            "{name}: cm structural {cm} against oracle over {field}"
        );
        let linear = has_linear_resolution_structural(g).holds();
        ensure!(
            linear == core(has_linear_resolution_oracle(&i, field, b))?,
            "{name}: linear structural {linear} against oracle over {field}"
        );
    }
    Ok(format!("{} posets", corpus.len()))
}

fn betti_polynomials(corpus: &[(String, GradedPoset)], field: FieldSpec, b: &Budgets) -> Check {
    let mut checked = 0usize;
    for (name, g) in corpus {
        let i = flag_ideal(g);
        for a in multidegrees(g) {
            let brute = core(betti_polynomial(&i, a, field, b))?;
            let fast = betti_polynomial_fast(g, a, field);
            ensure!(
                brute == fast,
                "{name}: A = {:?}: brute {brute}, fast {fast}",
                g.ids_of(a)
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} multidegrees over {}", corpus.len()))
}

fn first_strand(corpus: &[(String, GradedPoset)], field: FieldSpec, b: &Budgets) -> Check {
    let mut checked = 0usize;
    let mut members = 0usize;
    for (name, g) in corpus {
        let i = flag_ideal(g);
        let s = g.min_max_rank() as i32;
        for a in multidegrees(g) {
            let poly: LaurentPoly = core(betti_polynomial(&i, a, field, b))?;
            let nonzero = poly.coefficient(s) != 0;
            ensure!(
                in_first_strand(g, a) == nonzero,
                "{name}: A = {:?}: beta(A, t) = {poly}, s = {s}",
                g.ids_of(a)
            );
            checked += 1;
            members += nonzero as usize;
        }
    }
    Ok(format!("{checked} multidegrees, {members} in the first strand"))
}

fn linear_implies_pure_connected(corpus: &[(String, GradedPoset)], field: FieldSpec, b: &Budgets) -> Check {
    let mut linear = 0;
    for (name, g) in corpus {
        let structural = has_linear_resolution_structural(g).holds();
        let oracle = core(has_linear_resolution_oracle(&flag_ideal(g), field, b))?;
        if structural || oracle {
            ensure!(
                g.is_pure() && g.is_connected(),
                "{name}: linear resolution but not pure and connected"
            );
            linear += 1;
        }
    }
    Ok(format!("{linear} with a linear resolution"))
}

fn graph_sweep(field: FieldSpec, b: &Budgets) -> Check {
    for code in 1u32..512 {
        let l = graph(code);
        let ferrers = is_ferrers(&without_isolated(&l)).holds();
        let free = has_2k2(&l).is_none();
        let linear = core(has_linear_resolution_oracle(&edge_ideal(&l), field, b))?;
        ensure!(
            ferrers == free && free == linear,
            "graph {code:09b}: ferrers {ferrers}, 2K2-free {free}, linear {linear}"
        );
    }
    Ok("511 graphs with edges".into())
}

fn criterion_1(b: &Budgets) -> Check {
    let start = Instant::now();
    ensure!(pentagon().rank_function().is_none(), "pentagon has a rank function");
    ensure!(GradedPoset::new(pentagon()).is_err(), "pentagon accepted as graded");

    let g = example_3_4();
    ensure!(!core(check_unmixed_structural(&g, b))?.holds(), "3.4 unmixed");
    ensure!(!core(is_unmixed_bruteforce(&g, b))?, "3.4 unmixed by covers");
    let covers = core(minimal_vertex_covers(&g, b))?;
    let large: Vec<_> = covers.iter().filter(|c| c.elements.count_ones() != 3).collect();
    ensure!(large.len() == 1, "3.4 has {} covers not of size 3", large.len());
    let expected = core(g.mask_of(&["a1", "b1", "b3", "c3"]))?;
    ensure!(
        large[0].elements == expected,
        "3.4 large cover is {:?}",
        g.ids_of(large[0].elements)
    );
    for ranks in [[1, 2], [2, 3]] {
        let layer = core(g.rank_selection(&ranks))?;
        ensure!(
            core(check_unmixed_structural(&layer, b))?.holds(),
            "3.4 ranks {ranks:?} not unmixed"
        );
        ensure!(
            core(is_unmixed_bruteforce(&layer, b))?,
            "3.4 ranks {ranks:?} not unmixed by covers"
        );
    }

    let g = example_3_6();
    ensure!(g.is_pure(), "3.6 not pure");
    ensure!(
        core(check_weak_conditions(&g, b))? == (true, true),
        "3.6 weak conditions fail"
    );
    ensure!(!core(check_unmixed_structural(&g, b))?.holds(), "3.6 unmixed");
    ensure!(!core(is_unmixed_bruteforce(&g, b))?, "3.6 unmixed by covers");

    let g = example_4_9();
    let i = flag_ideal(&g);
    ensure!(
        i.generators().len() == 17,
        "4.9 has {} generators",
        i.generators().len()
    );
    ensure!(core(check_cm_structural(&g, b))?.holds(), "4.9 not structurally CM");
    ensure!(core(is_cm_oracle(&i, FieldSpec::Gf2, b))?, "4.9 not CM by the oracle");

    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!("{elapsed:.2?}"))
}

fn criterion_2(a: &[(String, GradedPoset)], corpus: &[(String, GradedPoset)], b: &Budgets) -> Check {
    let start = Instant::now();
    let ra = equivalences(a, FieldSpec::Gf2, b)?;
    let rb = equivalences(corpus, FieldSpec::Gf2, b)?;
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!("exhaustive {ra}, seeded {rb}, {elapsed:.2?}"))
}

fn criterion_5(a: &[(String, GradedPoset)], corpus: &[(String, GradedPoset)], b: &Budgets) -> Check {
    let sweep = graph_sweep(FieldSpec::Gf2, b)?;
    for (name, g) in a {
        let structural = has_linear_resolution_structural(g).holds();
        let oracle = core(has_linear_resolution_oracle(&flag_ideal(g), FieldSpec::Gf2, b))?;
        ensure!(
            structural == oracle,
            "{name}: linear structural {structural}, oracle {oracle}"
        );
    }
    let implied = linear_implies_pure_connected(corpus, FieldSpec::Gf2, b)?;
    Ok(format!("{sweep}; 512 bipartite posets; seeded corpus {implied}"))
}

/// Weakly increasing sequences of length `r` in `1..=t`.
fn multichains(r: usize, t: usize) -> usize {
    (0..t.pow(r as u32))
        .filter(|&code| {
            let digits: Vec<usize> = (0..r).map(|k| code / t.pow(k as u32) % t).collect();
            digits.windows(2).all(|w| w[0] <= w[1])
        })
        .count()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Whether the id pairs form a bijection `g -> h` preserving and reflecting covers.
fn is_isomorphism(g: &GradedPoset, h: &GradedPoset, pairs: &[(String, String)]) -> bool {
    let mut f = vec![usize::MAX; g.len()];
    for (x, y) in pairs {
        match (g.index_of(x), h.index_of(y)) {
            (Some(x), Some(y)) => f[x] = y,
            _ => return false,
        }
    }
    let image: BTreeSet<usize> = f.iter().copied().collect();
    g.len() == h.len()
        && !image.contains(&usize::MAX)
        && image.len() == h.len()
        && (0..g.len()).all(|x| (0..g.len()).all(|y| g.is_cover(x, y) == h.is_cover(f[x], f[y])))
}

fn criterion_6(a: &[(String, GradedPoset)], corpus: &[(String, GradedPoset)], b: &Budgets) -> Check {
    for r in 1..=3 {
        for t in 1..=3 {
            let h = core(hom_rt_poset(r, t))?;
            let count = flag_ideal(&h).generators().len();
            let chains = multichains(r, t);
            ensure!(
                count == chains,
                "hom({r},{t}) has {count} generators, {chains} multichains"
            );
            ensure!(
                count == binomial(t + r - 1, r),
                "hom({r},{t}) generators against the binomial"
            );
            ensure!(core(is_bi_cm(&h, b))?.holds(), "hom({r},{t}) not bi-CM");
        }
    }
    let mut found = 0;
    for (name, g) in a.iter().chain(corpus) {
        let i = flag_ideal(g);
        let oracle =
            core(is_cm_oracle(&i, FieldSpec::Gf2, b))? && core(has_linear_resolution_oracle(&i, FieldSpec::Gf2, b))?;
        let verdict = core(is_bi_cm(g, b))?;
        ensure!(
            verdict.holds() == oracle,
            "{name}: bi-CM {} against oracle {oracle}",
            verdict.holds()
        );
        if let Some(c) = verdict.certificate() {
            let h = core(hom_rt_poset(c.rank, c.width))?;
            ensure!(
                c.rank == g.top_rank() && c.width == g.layer(1).count_ones() as usize,
                "{name}: wrong hom parameters"
            );
            ensure!(
                is_isomorphism(g, &h, &c.isomorphism),
                "{name}: certificate is not an isomorphism"
            );
            ensure!(
                core(are_isomorphic(g, &h, b.iso_elements))?.is_some(),
                "{name}: not isomorphic to hom"
            );
            found += 1;
        }
    }
    Ok(format!(
        "hom(r,t) for r,t <= 3; {found} bi-CM corpus posets all isomorphic to hom posets"
    ))
}

fn criterion_7(a: &[(String, GradedPoset)], corpus: &[(String, GradedPoset)], b: &Budgets) -> Check {
    let mut certified = 0;
    let mut not_polymatroidal = Vec::new();
    for (name, g) in a.iter().chain(corpus) {
        let Some(d) = core(check_cm_structural(g, b))?.certificate().cloned() else {
            continue;
        };
        let d: ChainDecomposition = d;
        certified += 1;
        let dual = core(alexander_dual(&flag_ideal(g), b))?;
        let monomials: BTreeSet<Mask> = core(filtrations(g, &d, b))?
            .iter()
            .map(|f| filtration_to_monomial(&d, f))
            .collect::<flagideal::Result<_>>()
            .map_err(|e| e.to_string())?;
        let generators: BTreeSet<Mask> = dual.generators().iter().copied().collect();
        ensure!(
            monomials == generators,
            "{name}: filtration monomials differ from the dual generators"
        );
        if !core(is_weakly_polymatroidal(&dual, &proof_variable_order(g, &d)))? {
            let pure = if g.is_pure() { "pure" } else { "not pure" };
            let quotients = if core(has_linear_quotients(&dual, b))?.is_some() {
                "has"
            } else {
                "lacks"
            };
            not_polymatroidal.push(format!("{name} ({pure}, dual {quotients} linear quotients)"));
        }
    }
    ensure!(
        not_polymatroidal.is_empty(),
        "filtration monomials match on all {certified} CM-certified posets, but {} duals are not weakly \
         polymatroidal in the rank-major order: {}",
        not_polymatroidal.len(),
        not_polymatroidal.join("; ")
    );
    Ok(format!("{certified} CM-certified posets"))
}

fn criterion_8(corpus: &[(String, GradedPoset)], b: &Budgets) -> Check {
    let step = corpus.len() / 25;
    let sample: Vec<(String, GradedPoset)> = corpus.iter().step_by(step).take(25).cloned().collect();
    ensure!(sample.len() == 25, "subsample has {} posets", sample.len());
    let mut summary = Vec::new();
    for field in [GF32003, FieldSpec::Rationals] {
        equivalences(&sample, field, b)?;
        betti_polynomials(&sample, field, b)?;
        first_strand(&sample, field, b)?;
        linear_implies_pure_connected(&sample, field, b)?;
        for (name, g) in &sample {
            let i = flag_ideal(g);
            let here = core(full_betti_table(&i, field, b))?;
            let base = core(full_betti_table(&i, FieldSpec::Gf2, b))?;
            ensure!(
                here.entries() == base.entries(),
                "{name}: Betti table over {field} differs from GF(2)"
            );
            for a in multidegrees(g) {
                ensure!(
                    betti_polynomial_fast(g, a, field) == betti_polynomial_fast(g, a, FieldSpec::Gf2),
                    "{name}: beta({:?}, t) depends on the field",
                    g.ids_of(a)
                );
            }
        }
        summary.push(field.to_string());
    }
    graph_sweep(GF32003, b)?;
    Ok(format!(
        "25 posets over {}; graph sweep over {GF32003}",
        summary.join(" and ")
    ))
}

fn main() -> ExitCode {
    let b = Budgets::default();
    let a = corpus_a();
    let corpus = corpus_b();
    assert!(corpus.len() >= 200);
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 named examples", Box::new(|| criterion_1(&b))),
        (
            "2 structural and oracle equivalence",
            Box::new(|| criterion_2(&a, &corpus, &b)),
        ),
        (
            "3 Betti polynomial formula",
            Box::new(|| betti_polynomials(&corpus, FieldSpec::Gf2, &b)),
        ),
        (
            "4 first linear strand",
            Box::new(|| first_strand(&corpus, FieldSpec::Gf2, &b)),
        ),
        (
            "5 linear resolution equivalences",
            Box::new(|| criterion_5(&a, &corpus, &b)),
        ),
        ("6 bi-Cohen-Macaulay posets", Box::new(|| criterion_6(&a, &corpus, &b))),
        (
            "7 filtrations and the Alexander dual",
            Box::new(|| criterion_7(&a, &corpus, &b)),
        ),
        ("8 field independence", Box::new(|| criterion_8(&corpus, &b))),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(format!(
                "panicked: {:?}",
                e.downcast_ref::<String>()
                    .map(String::as_str)
                    .or(e.downcast_ref::<&str>().copied())
            ))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
