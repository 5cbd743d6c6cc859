//! `ctxgraph`: exclusivity-graph analysis from the command line.
//!
//! Exit codes: 0 success, 1 input error, 2 resource cap exceeded.

mod render;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use ctxgraph::census::{census, table1_census, Target};
use ctxgraph::eprinciple::{chain_report, EBudget};
use ctxgraph::error::Error;
use ctxgraph::events::{build_chsh_events, build_s_anticycle, build_s_cycle, InequalityInstance};
use ctxgraph::graph::{GraphSpec, ResolveOptions, DEFAULT_PRODUCT_VERTEX_CAP};
use ctxgraph::orthorep::{build_or_anticycle, build_or_cycle, handle_value, verify_faithful};
use ctxgraph::report::analyze;

#[derive(Parser)]
#[command(
    name = "ctxgraph",
    about = "Graph-theoretic analysis of noncontextuality inequalities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "CTXGRAPH_FORMAT")]
    format: Format,

    /// Vertex cap for disjunctive products in graph descriptors.
    #[arg(long, global = true, default_value_t = DEFAULT_PRODUCT_VERTEX_CAP, env = "CTXGRAPH_MAX_VERTICES")]
    max_vertices: usize,

    /// Wall-clock budget per clique search in the e-principle commands.
    #[arg(long, global = true, default_value_t = 600, env = "CTXGRAPH_CLIQUE_BUDGET_SECONDS")]
    clique_budget_seconds: u64,

    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, env = "CTXGRAPH_THREADS")]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrFamily {
    Cycle,
    Anticycle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InequalityFamily {
    Chsh,
    SCycle,
    SAnticycle,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: invariants, theta, perfectness, witnesses,
    /// classification, dimension bound.
    Analyze {
        /// Graph descriptor (see `catalog` for the grammar).
        spec: String,
        /// Print the partial report when a stage hits its resource cap
        /// (the exit code stays 2).
        #[arg(long)]
        partial: bool,
    },
    /// Induced-subgraph census against hole/antihole targets.
    Census {
        spec: String,
        /// Targets such as C5, C7, C7bar, C9, C9bar.
        #[arg(long, value_delimiter = ',', default_values_t = default_target_names())]
        targets: Vec<String>,
    },
    /// Census of the four built-in inequality graphs (KCBS, CHSH, KCBS-twin,
    /// Mermin) against the default targets.
    Table1,
    /// Lovász-optimum orthonormal representation of C_n or its complement.
    Orthorep {
        #[arg(value_enum)]
        family: OrFamily,
        n: usize,
    },
    /// Events, exclusivity graph, and bounds of an inequality family.
    Inequality {
        #[arg(value_enum)]
        family: InequalityFamily,
        /// Required for s-cycle / s-anticycle; ignored for chsh.
        n: Option<usize>,
    },
    /// Exclusivity-principle bound chain over disjunctive powers.
    Eprinciple {
        spec: String,
        #[arg(long, default_value_t = 2)]
        max_m: u32,
        /// Raise the clique budget to one hour for the dense power graphs.
        #[arg(long)]
        extended: bool,
    },
    /// List the graph-descriptor grammar and catalog names.
    Catalog,
}

fn default_target_names() -> Vec<String> {
    ["C5", "C7", "C7bar", "C9", "C9bar"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (e.g. `ctxgraph ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore failure: the global pool may already be initialized in tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::ResourceCap(_) => 2,
        _ => 1,
    }
}

fn resolve(cli: &Cli, spec: &str) -> Result<ctxgraph::Graph, Error> {
    GraphSpec::new(spec).resolve_with(&ResolveOptions {
        product_vertex_cap: cli.max_vertices,
    })
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Analyze { spec, partial } => {
            let g = resolve(cli, spec)?;
            let report = analyze(&g)?;
            let incomplete = !report.core_complete();
            if incomplete && !partial {
                eprintln!(
                    "error: analysis incomplete ({}); re-run with --partial for the partial report",
                    report.skipped.join("; ")
                );
                return Ok(ExitCode::from(2));
            }
            match cli.format {
                Format::Json => println!("{}", to_json(&report)?),
                Format::Text => render::analysis(&report),
            }
            Ok(if incomplete {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Census { spec, targets } => {
            let g = resolve(cli, spec)?;
            let targets = targets
                .iter()
                .map(|t| Target::parse(t))
                .collect::<Result<Vec<_>, _>>()?;
            let report = census(&g, &targets)?;
            match cli.format {
                Format::Json => println!("{}", to_json(&report)?),
                Format::Text => render::census_table(std::slice::from_ref(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 => {
            let reports = table1_census()?;
            match cli.format {
                Format::Json => println!("{}", to_json(&reports)?),
                Format::Text => render::census_table(&reports),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orthorep { family, n } => {
            let rep = match family {
                OrFamily::Cycle => build_or_cycle(*n)?,
                OrFamily::Anticycle => build_or_anticycle(*n)?,
            };
            let verification = verify_faithful(&rep);
            match cli.format {
                Format::Json => {
                    let mut value = to_json_value(&rep)?;
                    value["verification"] = to_json_value(&verification)?;
                    value["handle_value"] = to_json_value(&handle_value(&rep))?;
                    println!("{}", to_json(&value)?);
                }
                Format::Text => render::orthorep(&rep, &verification),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Inequality { family, n } => {
            let inst: InequalityInstance = match family {
                InequalityFamily::Chsh => build_chsh_events()?,
                InequalityFamily::SCycle => build_s_cycle(require_n(n)?)?,
                InequalityFamily::SAnticycle => build_s_anticycle(require_n(n)?)?,
            };
            match cli.format {
                Format::Json => println!("{}", to_json(&inst)?),
                Format::Text => render::inequality(&inst),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eprinciple {
            spec,
            max_m,
            extended,
        } => {
            let g = resolve(cli, spec)?;
            let mut budget = if *extended {
                EBudget::extended()
            } else {
                EBudget::default()
            };
            budget.clique_time_limit = Duration::from_secs(cli.clique_budget_seconds.max(
                if *extended { 3600 } else { 0 },
            ));
            let chain = chain_report(&g, *max_m, &budget)?;
            match cli.format {
                Format::Json => println!("{}", to_json(&chain)?),
                Format::Text => render::echain(&chain),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog => {
            render::catalog();
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn require_n(n: &Option<usize>) -> Result<usize, Error> {
    n.ok_or_else(|| Error::InvalidParameter("this family needs n".into()))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Internal(format!("json: {e}")))
}

fn to_json_value<T: serde::Serialize>(value: &T) -> Result<serde_json::Value, Error> {
    serde_json::to_value(value).map_err(|e| Error::Internal(format!("json: {e}")))
}
