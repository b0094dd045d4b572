//! `flagideal`: classify posets by their flag ideals, compute multigraded
//! Betti numbers, and generate random graded posets.
//!
//! Exit codes: 0 on success, 2 when a search budget is exhausted, 1 for
//! every other failure (unreadable or malformed input, bad arguments, a
//! failed `--verify`).

mod render;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagideal::bits::Mask;
use flagideal::covers::minimal_vertex_covers;
use flagideal::homology::{
    betti_multidegree, betti_polynomial, betti_polynomial_fast, fast_betti_table, full_betti_table, FieldSpec,
};
use flagideal::ideals::flag_ideal;
use flagideal::poset::{are_isomorphic, text};
use flagideal::random::RandomPosetSpec;
use flagideal::report::{classify, ClassifyOptions};
use flagideal::{Budgets, GradedPoset, Poset};
use serde_json::json;

#[derive(Debug)]
pub enum CliError {
    Core(flagideal::Error),
    Io(String),
    Usage(String),
    Verify(String),
}

impl From<flagideal::Error> for CliError {
    fn from(e: flagideal::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => write!(f, "{m}"),
            CliError::Verify(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

/// Search limits; each defaults to the library default.
#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest poset for minimal vertex cover enumeration.
    #[arg(long, global = true, value_parser = positive)]
    budget_cover_enum: Option<usize>,
    /// Largest variable set for full Betti tables.
    #[arg(long, global = true, value_parser = positive)]
    budget_betti_vars: Option<usize>,
    /// Search nodes for matching and labeling enumeration.
    #[arg(long, global = true, value_parser = positive)]
    budget_matching_nodes: Option<usize>,
    /// Largest poset handed to the isomorphism search.
    #[arg(long, global = true, value_parser = positive)]
    budget_iso_elements: Option<usize>,
    /// Saturated chain pairs examined by the recombination conditions.
    #[arg(long, global = true, value_parser = positive)]
    budget_chain_pairs: Option<usize>,
    /// Search nodes for the linear quotients ordering search.
    #[arg(long, global = true, value_parser = positive)]
    budget_quotient_nodes: Option<usize>,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        let d = Budgets::default();
        Budgets {
            cover_enum: self.budget_cover_enum.unwrap_or(d.cover_enum),
            betti_vars: self.budget_betti_vars.unwrap_or(d.betti_vars),
            matching_nodes: self.budget_matching_nodes.unwrap_or(d.matching_nodes),
            iso_elements: self.budget_iso_elements.unwrap_or(d.iso_elements),
            chain_pairs: self.budget_chain_pairs.unwrap_or(d.chain_pairs),
            quotient_nodes: self.budget_quotient_nodes.unwrap_or(d.quotient_nodes),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "flagideal", version, about = "Flag ideals of graded posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coefficient field: gf2, gfp:<p> or q.
    #[arg(long, global = true, default_value = "gf2", value_parser = |s: &str| s.parse::<FieldSpec>().map_err(|e| e.to_string()))]
    field: FieldSpec,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Human-readable text output (same as `--format text`).
    #[arg(long, global = true)]
    pretty: bool,
    #[command(flatten)]
    budgets: BudgetArgs,
}

/// A poset file (`-` for standard input) or a built-in example.
#[derive(Debug, Args)]
struct Input {
    /// Poset file in the `# flagposet v1` text format.
    #[arg(conflicts_with = "example", required_unless_present = "example")]
    file: Option<String>,
    /// Built-in poset: pentagon | 3.4 | 3.6 | 4.9 | hom:r,t | letterplace:n,<poset> |
    /// chain:n | antichain:n | v:r,s | coletterplace:r,s,n
    #[arg(long)]
    example: Option<String>,
}

impl Input {
    fn load(&self) -> Result<Poset, CliError> {
        match (&self.file, &self.example) {
            (_, Some(name)) => source::example(name),
            (Some(path), None) => source::file(path),
            (None, None) => Err(CliError::Usage("give a poset file or --example".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural tests and homological oracles for unmixedness,
    /// Cohen-Macaulayness, linear resolutions and bi-Cohen-Macaulayness.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Skip the homological oracles and the cover enumeration.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Multigraded Betti numbers of the flag ideal.
    Betti {
        #[command(flatten)]
        input: Input,
        /// One multidegree as comma-separated element ids.
        #[arg(long)]
        multidegree: Option<String>,
        /// Use the layerwise formula instead of the full restriction complexes.
        #[arg(long)]
        fast: bool,
        /// Compute both ways and fail unless they agree.
        #[arg(long)]
        verify: bool,
    },
    /// Minimal vertex covers (minimal primes of the flag ideal).
    Covers {
        #[command(flatten)]
        input: Input,
    },
    /// A random graded poset with the given layer widths.
    Generate {
        /// Layer widths from rank 1 upward, comma-separated.
        #[arg(long, value_delimiter = ',', required = true, value_parser = positive)]
        widths: Vec<usize>,
        /// Probability of each non-forced cover between consecutive layers.
        #[arg(long, default_value_t = 0.5)]
        q: f64,
    },
    /// Whether two posets are isomorphic. Each argument is a file or
    /// `example:<name>`.
    Isomorphic { first: String, second: String },
    /// Write a poset in the text format.
    Print {
        #[command(flatten)]
        input: Input,
    },
}

fn graded(p: Poset) -> Result<GradedPoset, CliError> {
    Ok(GradedPoset::new(p)?)
}

fn multidegree(p: &Poset, ids: &str) -> Result<Mask, CliError> {
    let ids: Vec<&str> = ids.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(p.mask_of(&ids)?)
}

fn json_line(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable value")
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let budgets = cli.budgets.budgets();
    let field = cli.field;
    let format = if cli.pretty { Format::Text } else { cli.format };
    match &cli.command {
        Command::Classify { input, no_oracle } => {
            let p = input.load()?;
            let report = classify(
                &p,
                ClassifyOptions {
                    field,
                    oracles: !no_oracle,
                },
                &budgets,
            )?;
            Ok(match format {
                Format::Json => json_line(&report),
                Format::Csv => render::classification_csv(&report),
                Format::Text => render::classification_text(&report),
            })
        }
        Command::Betti {
            input,
            multidegree: md,
            fast,
            verify,
        } => {
            let p = input.load()?;
            let ideal = flag_ideal(&p);
            let g = if *fast || *verify {
                Some(graded(p.clone())?)
            } else {
                None
            };
            match md {
                Some(ids) => {
                    let a = multidegree(&p, ids)?;
                    let brute = (!*fast || *verify)
                        .then(|| betti_polynomial(&ideal, a, field, &budgets))
                        .transpose()?;
                    let quick = g.as_ref().map(|g| betti_polynomial_fast(g, a, field));
                    if let (Some(x), Some(y)) = (&brute, &quick) {
                        if x != y {
                            return Err(CliError::Verify(format!(
                                "brute force gives {x}, the layerwise formula {y}"
                            )));
                        }
                    }
                    let poly = brute.or(quick).unwrap_or_default();
                    let betti = betti_multidegree(&ideal, a, field, &budgets)?;
                    let ids = p.ids_of(a);
                    Ok(match format {
                        Format::Json => json_line(&json!({
                            "multidegree": ids,
                            "polynomial": poly,
                            "display": poly.to_string(),
                            "betti": betti,
                            "verified": verify,
                        })),
                        Format::Csv => render::betti_row_csv(&betti),
                        Format::Text => format!("beta({{{}}}, t) = {poly}\n", ids.join(", ")),
                    })
                }
                None => {
                    let brute = (!*fast || *verify)
                        .then(|| full_betti_table(&ideal, field, &budgets))
                        .transpose()?;
                    let quick = g.as_ref().map(|g| fast_betti_table(g, field, &budgets)).transpose()?;
                    if let (Some(x), Some(y)) = (&brute, &quick) {
                        if x != y {
                            return Err(CliError::Verify("brute-force and layerwise Betti tables differ".into()));
                        }
                    }
                    let table = brute.or(quick).expect("one of the two paths ran");
                    Ok(match format {
                        Format::Json => json_line(&table),
                        Format::Csv => table.to_csv(),
                        Format::Text => render::betti_table_text(&table),
                    })
                }
            }
        }
        Command::Covers { input } => {
            let p = input.load()?;
            let covers = minimal_vertex_covers(&p, &budgets)?;
            let lists: Vec<Vec<&str>> = covers.iter().map(|c| p.ids_of(c.elements)).collect();
            Ok(match format {
                Format::Json => json_line(&json!({ "count": lists.len(), "covers": lists })),
                Format::Csv => render::covers_csv(&lists),
                Format::Text => render::covers_text(&lists),
            })
        }
        Command::Generate { widths, q } => {
            let spec = RandomPosetSpec::new(widths.clone(), *q, cli.seed)?;
            Ok(text::write(spec.generate()?.poset()))
        }
        Command::Isomorphic { first, second } => {
            let (p, q) = (source::spec(first)?, source::spec(second)?);
            let f = are_isomorphic(&p, &q, budgets.iso_elements)?;
            let mapping: Option<Vec<(&str, &str)>> =
                f.map(|f| f.iter().enumerate().map(|(x, &y)| (p.id(x), q.id(y))).collect());
            Ok(match format {
                Format::Json => json_line(&json!({ "isomorphic": mapping.is_some(), "mapping": mapping })),
                Format::Csv => render::mapping_csv(mapping.as_deref()),
                Format::Text => render::mapping_text(mapping.as_deref()),
            })
        }
        Command::Print { input } => Ok(text::write(&input.load()?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
