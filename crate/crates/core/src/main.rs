//! Command-line interface.
//!
//! Exit codes: 0 success / positive answer, 1 infeasible or negative
//! answer, 2 unknown, 3 error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polyx::atlas::{self, Catalog, CatalogEntry, Feasibility};
use polyx::decomp::{self, Verdict};
use polyx::error::Result;
use polyx::families::expr;
use polyx::lattice;
use polyx::polytope::Polytope;

#[derive(Parser)]
#[command(name = "polyx", about = "exact combinatorial polytope toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polytope from a constructor expression.
    Construct {
        /// Constructor expression, e.g. "pentasm(4)" or "pyr^3(pentagon)".
        /// A family name followed by integer arguments also works.
        expr: Vec<String>,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structural report: f-vector, excess, flags, facet properties.
    Analyze { file: PathBuf },
    /// Decomposability verdict with replayable evidence.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        /// Write a self-contained certificate document here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-verify a certificate document produced by classify.
    VerifyCert { certificate: PathBuf },
    /// Combinatorial isomorphism of two polytope files.
    Iso { a: PathBuf, b: PathBuf },
    /// Search for a polytope with the given dimension and counts.
    Witness {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
    },
    /// Feasibility table for all edge counts up to a vertex bound.
    Table {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        max_vertices: usize,
    },
    /// Achieved excess values over the generated corpus.
    Spectrum {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Generate the corpus and store its catalog.
    Corpus {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long)]
        catalog: PathBuf,
    },
}

fn load(path: &PathBuf) -> Result<Polytope> {
    Polytope::from_json(&std::fs::read_to_string(path)?)
}

fn emit(text: String, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Construct { expr: parts, output } => {
            let text = if parts.len() > 1 {
                format!("{}({})", parts[0], parts[1..].join(","))
            } else {
                parts.join("")
            };
            let p = expr::replay(&text)?;
            emit(p.to_json(), output.as_ref())?;
            Ok(0)
        }
        Command::Analyze { file } => {
            let p = load(&file)?;
            let report = polyx::analysis::analyze(&p)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(0)
        }
        Command::Classify { file, depth, output } => {
            let p = load(&file)?;
            let cert = decomp::classify(&p, depth)?;
            let doc = serde_json::json!({
                "polytope": serde_json::from_str::<serde_json::Value>(&p.to_json())?,
                "certificate": cert,
            });
            emit(serde_json::to_string_pretty(&doc)?, output.as_ref())?;
            Ok(match cert.verdict {
                Verdict::Decomposable | Verdict::Indecomposable => 0,
                Verdict::Unknown => 2,
            })
        }
        Command::VerifyCert { certificate } => {
            let doc: serde_json::Value =
                serde_json::from_str(&std::fs::read_to_string(&certificate)?)?;
            let p = Polytope::from_json(&doc["polytope"].to_string())?;
            let cert: decomp::DecompCertificate =
                serde_json::from_value(doc["certificate"].clone())?;
            match decomp::verify_certificate(&p, &cert) {
                Ok(()) => {
                    println!("certificate verified");
                    Ok(0)
                }
                Err(e) => {
                    println!("{e}");
                    Ok(1)
                }
            }
        }
        Command::Iso { a, b } => {
            let pa = load(&a)?;
            let pb = load(&b)?;
            if lattice::is_isomorphic(&pa, &pb) {
                println!("isomorphic");
                Ok(0)
            } else {
                println!("not isomorphic");
                Ok(1)
            }
        }
        Command::Witness { dim, vertices, edges } => match atlas::witness(dim, vertices, edges)? {
            Feasibility::Feasible { witness } => {
                println!("feasible: {witness}");
                Ok(0)
            }
            Feasibility::Infeasible { rule } => {
                println!("infeasible by rule {rule:?}");
                Ok(1)
            }
            Feasibility::Unknown => {
                println!("unknown");
                Ok(2)
            }
        },
        Command::Table { dim, max_vertices } => {
            let table = atlas::e_table(dim, max_vertices)?;
            let mut f0 = 0;
            for row in &table.rows {
                if row.f0 != f0 {
                    f0 = row.f0;
                    println!("f0 = {f0}");
                }
                match &row.verdict {
                    Feasibility::Feasible { witness } => {
                        println!("  f1 = {:>3}  feasible    {witness}", row.f1)
                    }
                    Feasibility::Infeasible { rule } => {
                        println!("  f1 = {:>3}  infeasible  {rule:?}", row.f1)
                    }
                    Feasibility::Unknown => println!("  f1 = {:>3}  unknown", row.f1),
                }
            }
            Ok(0)
        }
        Command::Spectrum { dim, max_vertices } => {
            let corpus = atlas::generate_corpus(dim, 1)?;
            let xs = atlas::spectrum(&corpus, max_vertices);
            let list: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            println!("spectrum({dim}) over {} polytopes: {{{}}}", corpus.members.len(), list.join(", "));
            if dim == 7 {
                println!(
                    "note: excess 11 {} found in this corpus; whether it occurs at all in dimension 7 stays open",
                    if xs.contains(&11) { "was" } else { "was not" }
                );
            }
            Ok(0)
        }
        Command::Corpus { dim, depth, catalog } => {
            let corpus = atlas::generate_corpus(dim, depth)?;
            let mut cat = Catalog::new();
            for p in &corpus.members {
                let mut entry = CatalogEntry::describe(p)?;
                entry.classification = decomp::classify(p, 1).ok().map(|c| c.verdict);
                cat.insert(entry);
            }
            cat.store(&catalog)?;
            println!("stored {} entries in {}", cat.len(), catalog.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
