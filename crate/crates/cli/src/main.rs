//! Command line front end: axiom profiles, sg* classification, semi-open
//! families, claim sweeps, profile search, and the worked-example report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bispace_core::axioms;
use bispace_core::harness::io;
use bispace_core::harness::paper;
use bispace_core::harness::search::{search_profile, ProfilePredicate};
use bispace_core::harness::sweep::{sweep, SweepConfig, Verdict};
use bispace_core::kappa_family::{Bispace, KappaIndex};
use bispace_core::semi_ops::{SemiFamilyRepr, SemiOps};
use bispace_core::set_universe::{SetExpr, Universe};
use bispace_core::sg_star::{self, SgIndex};
use bispace_core::Error;

#[derive(Parser)]
#[command(
    name = "bispace",
    version,
    about = "Verify semi-open structure, sg*-closed sets, and pairwise separation axioms in bispaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the axiom profile of a bispace file
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Classify a subset as (j-i)sg*-closed and report the certificate
    Classify {
        file: PathBuf,
        /// Comma-separated point labels (atoms on a symbolic carrier)
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
        /// Interpret --set as the carrier minus the listed atoms
        #[arg(long)]
        complement: bool,
        /// Index whose semi-open supersets are quantified over (j)
        #[arg(long)]
        open_side: u8,
        /// Index supplying the semi-closed certificate (i)
        #[arg(long)]
        closed_side: u8,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print the semi-open family of one structure
    Semi {
        file: PathBuf,
        /// Structure index, 1 or 2
        #[arg(long)]
        index: u8,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Sweep registered claims over every bispace pair on n labeled points
    Verify {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Claim ids to run (default: all 29)
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Worker count
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the JSON report to a file
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Find the first enumerated bispace matching a profile predicate
    Search {
        /// Boolean expression over T0 T1 R0 Tw Sym SSym Door C1 C2 ScEqSo
        #[arg(long)]
        profile: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Recompute every assertion of the bundled example catalog
    PaperExamples {
        #[command(flatten)]
        format: FormatArg,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Indeterminate(_) | Error::FiniteOnly => 3,
        Error::Internal(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn parse_set(b: &Bispace, labels: &[String], complement: bool) -> Result<SetExpr, Error> {
    match b.universe() {
        Universe::Finite(u) => {
            let mask = u.mask_of(labels.iter().map(|s| s.as_str()))?;
            Ok(if complement {
                SetExpr::FiniteMask(!mask & u.full_mask())
            } else {
                SetExpr::FiniteMask(mask)
            })
        }
        Universe::Symbolic(u) => {
            if complement {
                u.co_finite(labels.iter().map(|s| s.as_str()))
            } else {
                u.explicit_small(labels.iter().map(|s| s.as_str()))
            }
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Analyze { file, format } => {
            let b = io::load_bispace(&file)?;
            let entries = axioms::profile_entries(&b);
            match format.format {
                Format::Text => {
                    println!("axiom profile for {}", file.display());
                    for (name, value) in &entries {
                        let rendered = match value {
                            Ok(v) => v.to_string(),
                            Err(Error::FiniteOnly) => "n/a (finite carriers only)".into(),
                            Err(e) => format!("indeterminate ({e})"),
                        };
                        println!("  {name:<7} {rendered}");
                    }
                }
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = entries
                        .iter()
                        .map(|(name, value)| {
                            let v = match value {
                                Ok(v) => json!(v),
                                Err(_) => serde_json::Value::Null,
                            };
                            (name.to_string(), v)
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&map).unwrap());
                }
            }
            Ok(())
        }
        Command::Classify {
            file,
            set,
            complement,
            open_side,
            closed_side,
            format,
        } => {
            let b = io::load_bispace(&file)?;
            let idx = SgIndex::new(
                KappaIndex::from_number(open_side)?,
                KappaIndex::from_number(closed_side)?,
            )?;
            let target = parse_set(&b, &set, complement)?;
            let ops = SemiOps::new(&b);
            let (closed, witness) = sg_star::is_sg_star_closed(&ops, idx, &target)?;
            let open = sg_star::is_sg_star_open(&ops, idx, &target)?;
            let u = b.universe();
            match format.format {
                Format::Text => {
                    println!("set {} under {}", u.render(&target), idx);
                    println!("  sg*-closed: {closed}");
                    if let Some(w) = &witness {
                        println!("  certificate: {}", u.render(&w.0));
                    }
                    println!("  sg*-open:   {open}");
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "set": u.render(&target),
                            "index": idx.to_string(),
                            "sg_star_closed": closed,
                            "certificate": witness.map(|w| u.render(&w.0)),
                            "sg_star_open": open,
                        }))
                        .unwrap()
                    );
                }
            }
            Ok(())
        }
        Command::Semi {
            file,
            index,
            format,
        } => {
            let b = io::load_bispace(&file)?;
            let i = KappaIndex::from_number(index)?;
            let ops = SemiOps::new(&b);
            let family = ops.family(i);
            match (&family.repr, format.format) {
                (SemiFamilyRepr::Finite(sets), Format::Text) => {
                    let u = b.universe().as_finite().expect("finite family");
                    println!("semi-k{index}-open family ({} sets):", sets.len());
                    for &m in *sets {
                        println!("  {{{}}}", u.labels_of(m).join(","));
                    }
                }
                (SemiFamilyRepr::Finite(sets), Format::Json) => {
                    let u = b.universe().as_finite().expect("finite family");
                    let rendered: Vec<Vec<String>> = sets.iter().map(|&m| u.labels_of(m)).collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "index": index,
                            "semi_open": rendered,
                        }))
                        .unwrap()
                    );
                }
                (SemiFamilyRepr::Symbolic(d), Format::Text) => {
                    println!("semi-k{index}-open family: {d}");
                }
                (SemiFamilyRepr::Symbolic(d), Format::Json) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "index": index,
                            "description": d,
                        }))
                        .unwrap()
                    );
                }
            }
            Ok(())
        }
        Command::Verify {
            n,
            claims,
            jobs,
            output,
            format,
        } => {
            let cfg = SweepConfig { n, claims, jobs };
            let reports = sweep(&cfg)?;
            if let Some(path) = output {
                io::save_report(&reports, path)?;
            }
            match format.format {
                Format::Text => {
                    let pairs = reports.first().map(|r| r.bispace_count).unwrap_or(0);
                    println!("sweep over {pairs} bispaces on {n} labeled points");
                    for r in &reports {
                        match &r.verdict {
                            Verdict::Holds => println!("  {:8} HOLDS", r.claim),
                            Verdict::Refuted { pair, witness, .. } => {
                                let parts: Vec<String> =
                                    witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                                println!(
                                    "  {:8} REFUTED at pair ({}, {}): {}",
                                    r.claim,
                                    pair.0,
                                    pair.1,
                                    parts.join(", ")
                                );
                            }
                        }
                    }
                    let elapsed = reports.first().map(|r| r.elapsed).unwrap_or_default();
                    println!("elapsed: {elapsed:?}");
                }
                Format::Json => println!("{}", io::report_to_json(&reports)),
            }
            Ok(())
        }
        Command::Search {
            profile,
            max_n,
            format,
        } => {
            let pred = ProfilePredicate::parse(&profile)?;
            let hit = search_profile(&pred, max_n)?;
            match format.format {
                Format::Text => match &hit {
                    Some(h) => {
                        println!(
                            "found at n={} (structure pair {}, {}):",
                            h.n, h.pair.0, h.pair.1
                        );
                        println!("  {}", io::bispace_to_json(&h.bispace));
                    }
                    None => println!("no bispace with {profile} up to n={max_n}"),
                },
                Format::Json => {
                    let value = match &hit {
                        Some(h) => json!({
                            "profile": profile,
                            "found": {
                                "n": h.n,
                                "pair": [h.pair.0, h.pair.1],
                                "bispace": io::bispace_to_json(&h.bispace),
                                "axioms": h.profile,
                            },
                        }),
                        None => json!({ "profile": profile, "found": null }),
                    };
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(())
        }
        Command::PaperExamples { format } => {
            let report = paper::paper_examples_report();
            match format.format {
                Format::Text => {
                    for e in &report.examples {
                        println!("{} — {}", e.id, e.description);
                        for a in &e.assertions {
                            let mark = if a.agrees { "agree   " } else { "DISAGREE" };
                            println!("  [{mark}] {}", a.assertion);
                            if !a.agrees {
                                println!(
                                    "             stated {} / computed {}{}",
                                    a.stated,
                                    a.computed,
                                    a.witness
                                        .as_deref()
                                        .map(|w| format!(" ({w})"))
                                        .unwrap_or_default()
                                );
                            }
                        }
                    }
                    println!(
                        "discrepancy findings: {} (examples: {})",
                        report.discrepancies.len(),
                        report.discrepancy_examples().join(", ")
                    );
                }
                Format::Json => println!("{}", io::report_to_json(&report)),
            }
            Ok(())
        }
    }
}
