//! `softop`: validate and classify finite soft topological spaces, check the
//! proposition catalog, and search for strictness witnesses.

mod demo;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use softop::enumerate::{count_topologies, MAX_ENUMERATION_CELLS};
use softop::{CheckConfig, Conventions, Error, PropositionId, SearchBudget, Separation};

#[derive(Parser)]
#[command(name = "softop", version, about = "Finite soft topology workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Quantify the Tᵢ axioms over all pairs of distinct soft points.
    #[arg(long, global = true)]
    strict_separation: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check a space document against the soft topology axioms.
    Validate {
        #[arg(long)]
        space: PathBuf,
    },
    /// Classify a named soft set of a space.
    Classify {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        set: String,
        /// Named set to use as a subspace carrier.
        #[arg(long)]
        carrier: Option<String>,
    },
    /// Classify the soft function in a function document.
    MapClassify {
        #[arg(long)]
        function: PathBuf,
    },
    /// Run catalog checks (every id when `--prop` is absent).
    Check(RunArgs),
    /// Run strictness searches (every search id when `--prop` is absent).
    Search(RunArgs),
    /// Count the soft topologies on a universe with `--cells` cells.
    Enumerate {
        #[arg(long)]
        cells: usize,
    },
    /// Reproduce the built-in subspace and identity examples.
    Demo,
}

#[derive(Args)]
struct RunArgs {
    /// Comma-separated catalog ids.
    #[arg(long, value_delimiter = ',')]
    prop: Vec<PropositionId>,
    /// Largest |E|·|X| examined.
    #[arg(long)]
    cells: Option<usize>,
    /// Cell counts above this are sampled rather than enumerated.
    #[arg(long)]
    exhaustive_cells: Option<usize>,
    /// Random instances per sampled cell count.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Instances examined per id before a run is marked incomplete.
    #[arg(long)]
    max_checks: Option<u64>,
    /// Largest cell count a strictness search reaches.
    #[arg(long)]
    witness_cells: Option<usize>,
    /// Quantify over every labeled instance instead of one per isomorphism class.
    #[arg(long)]
    no_symmetry: bool,
    /// Evaluate on one thread.
    #[arg(long)]
    serial: bool,
    /// Include wall times in the report.
    #[arg(long)]
    timings: bool,
}

impl RunArgs {
    fn budget(&self) -> SearchBudget {
        let mut budget = SearchBudget::default();
        if let Some(cells) = self.cells {
            budget.max_cells = cells;
            budget.exhaustive_cells = cells.min(budget.exhaustive_cells);
        }
        if let Some(cells) = self.exhaustive_cells {
            budget.exhaustive_cells = cells;
        }
        if let Some(n) = self.samples {
            budget.sample_count = n;
        }
        if let Some(seed) = self.seed {
            budget.seed = seed;
        }
        if let Some(n) = self.max_checks {
            budget.max_checks = n;
        }
        if let Some(cells) = self.witness_cells {
            budget.witness_cells = cells;
        }
        budget.symmetry = !self.no_symmetry;
        budget
    }
}

/// Exit status 1: a verdict went the wrong way.
const FAILED: u8 = 1;
/// Exit status 2: the input could not be used.
const MALFORMED: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(MALFORMED)
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("values always serialize"));
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let separation = if cli.strict_separation {
        Separation::AllPoints
    } else {
        Separation::SameParameter
    };
    let machine = cli.format == Format::Machine;
    match &cli.command {
        Command::Validate { space } => {
            let doc = input::space_document(space)?;
            let universe = input::located(space, doc.universe())?;
            let family = input::located(space, doc.family(&universe))?;
            input::located(space, doc.resolve(&universe))?;
            let result = if doc.subbasis {
                Ok(softop::SoftTopology::generate(&universe, family)?)
            } else {
                softop::SoftTopology::new(&universe, family)
            };
            match result {
                Ok(t) => {
                    if machine {
                        print_json(&json!({ "valid": true, "open_sets": t.len() }));
                    } else {
                        println!("valid soft topology with {} open sets", t.len());
                    }
                    Ok(0)
                }
                Err(Error::NotATopology(v)) => {
                    if machine {
                        print_json(&json!({ "valid": false, "violation": v.to_string() }));
                    } else {
                        println!("not a soft topology: {v}");
                    }
                    Ok(FAILED)
                }
                Err(other) => Err(other.into()),
            }
        }
        Command::Classify { space, set, carrier } => {
            let loaded = input::space(space)?;
            let lookup = |name: &str| {
                loaded
                    .set(name)
                    .with_context(|| format!("{}: no set named `{name}` in the document", space.display()))
            };
            let g = lookup(set)?;
            let view = match carrier {
                Some(name) => {
                    let y = lookup(name)?;
                    if y.is_null() {
                        bail!("{}: carrier `{name}` is the null soft set", space.display());
                    }
                    if !g.is_subset(y)? {
                        bail!("{}: set `{set}` is not contained in carrier `{name}`", space.display());
                    }
                    loaded.topology.space().relative(y.bits())
                }
                None => loaded.topology.space(),
            };
            let vector = view.classify(g.bits(), Conventions::STANDARD);
            if machine {
                print_json(&json!({
                    "set": set,
                    "carrier": carrier,
                    "classification": vector,
                }));
            } else {
                let over = carrier.as_deref().unwrap_or("X");
                println!("{set} = {g} over {over}");
                println!("{vector}");
            }
            Ok(0)
        }
        Command::MapClassify { function } => {
            let (f, dom, cod) = input::function(function)?;
            let c = f
                .classify(&dom.topology, &cod.topology)
                .with_context(|| format!("{}: cannot classify", function.display()))?;
            if machine {
                print_json(&json!({ "classification": c }));
            } else {
                println!("{c}");
            }
            Ok(0)
        }
        Command::Check(args) | Command::Search(args) => {
            let searching = matches!(cli.command, Command::Search(_));
            let ids: Vec<PropositionId> = if !args.prop.is_empty() {
                args.prop.clone()
            } else if searching {
                PropositionId::ALL.iter().copied().filter(|id| id.is_search()).collect()
            } else {
                PropositionId::ALL.to_vec()
            };
            let config = CheckConfig {
                separation,
                serial: args.serial,
                ..CheckConfig::default()
            };
            let report = softop::run_ids(&ids, &args.budget(), &config);
            if machine {
                println!("{}", report.to_machine(args.timings));
            } else {
                print!("{}", report.to_text(true));
            }
            Ok(if report.has_counterexample() { FAILED } else { 0 })
        }
        Command::Enumerate { cells } => {
            if *cells == 0 {
                bail!("--cells must be at least 1");
            }
            let count = count_topologies(*cells).map_err(|_| {
                anyhow::anyhow!(
                    "{cells} cells exceed the exhaustive limit of {MAX_ENUMERATION_CELLS}; use `check --cells {cells}` for sampled runs"
                )
            })?;
            if machine {
                print_json(&json!({ "cells": cells, "topologies": count }));
            } else {
                println!("{count}");
            }
            Ok(0)
        }
        Command::Demo => {
            let outcome = demo::run(separation)?;
            if machine {
                print_json(&outcome.to_json());
            } else {
                for line in &outcome.lines {
                    println!("{line}");
                }
            }
            Ok(if outcome.passed { 0 } else { FAILED })
        }
    }
}
