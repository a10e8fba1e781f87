//! `polyfaces`: enumerate face posets, project trees, inspect fibers, check
//! cofinality, evaluate charts and identify strata.
//!
//! Payloads are JSON on stdout (DOT for `enumerate --format dot`). Usage
//! errors exit with 2; failed computations or checks exit with 1 and a JSON
//! diagnostic on stderr.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyfaces::charts::{chart, identify_stratum, ChartKind, Configuration, EpsilonPath, Space};
use polyfaces::functors::{fiber_geq_poset, fiber_poset, Functor, Projection};
use polyfaces::poset::face_poset;
use polyfaces::topology::{cofinality_report, contractibility, order_complex};
use polyfaces::tree::{parse, AnyTree, Species};
use polyfaces::verify::{run_suite, Suite};
use polyfaces::words::{f_embed, Word};
use polyfaces::Error;

/// Largest `n` for commands that compute homology, unless raised.
const HOMOLOGY_CAP: usize = 4;

#[derive(Parser)]
#[command(name = "polyfaces", version, about = "Face posets of associahedra, cyclohedra and permutohedra")]
struct Cli {
    /// Raise the size caps (also read from POLYFACES_MAX_N).
    #[arg(long, global = true, env = "POLYFACES_MAX_N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Count,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the face poset of a species.
    Enumerate {
        #[arg(long)]
        species: Species,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply a projection to one tree.
    Project {
        #[arg(long)]
        functor: Functor,
        #[arg(long)]
        input: String,
    },
    /// The fan fiber over a planar tree, optionally above a fan.
    Fiber {
        #[arg(long)]
        over: String,
        #[arg(long)]
        geq: Option<String>,
        /// Add reduced Betti numbers and a collapse check.
        #[arg(long)]
        homology: bool,
    },
    /// Check that every comma poset of a projection is acyclic.
    Cofinal {
        #[arg(long)]
        functor: Functor,
        #[arg(long)]
        n: usize,
    },
    /// Cube center of a word.
    CubeEmbed {
        #[arg(long)]
        word: Word,
    },
    /// Evaluate a chart at a configuration `t1,…,tn`.
    Chart {
        #[arg(long)]
        kind: ChartKind,
        #[arg(long)]
        config: String,
    },
    /// The face a path `p1(e),…,pn(e)` degenerates onto.
    Stratum {
        #[arg(long)]
        path: String,
        #[arg(long)]
        space: Space,
    },
    /// Run acceptance suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

enum Outcome {
    Json(Value),
    Text(String),
    /// A check that ran but did not hold.
    Failed(Value),
}

fn homology_cap(cli_cap: Option<usize>, n: usize) -> polyfaces::Result<()> {
    let cap = cli_cap.unwrap_or(HOMOLOGY_CAP);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

fn planar(text: &str) -> polyfaces::Result<polyfaces::tree::PlanarTree> {
    match parse(text)? {
        AnyTree::Psi(t) => Ok(t),
        other => Err(Error::Precondition(format!("{other} is not a planar tree"))),
    }
}

fn run(cli: &Cli) -> polyfaces::Result<Outcome> {
    Ok(match &cli.command {
        Command::Enumerate { species, n, format } => {
            let p = face_poset(*species, *n)?;
            match format {
                Format::Count => Outcome::Json(json!(p.len())),
                Format::Json => Outcome::Json(p.to_json()),
                Format::Dot => Outcome::Text(p.hasse_dot()),
            }
        }
        Command::Project { functor, input } => Outcome::Json(json!(functor.apply(&parse(input)?)?.to_string())),
        Command::Fiber { over, geq, homology } => {
            let y = planar(over)?;
            let fiber = match geq {
                None => fiber_poset(&y)?,
                Some(f) => match parse(f)? {
                    AnyTree::Fan(f) => fiber_geq_poset(&y, &f)?,
                    other => return Err(Error::Precondition(format!("{other} is not a fan"))),
                },
            };
            let mut v = fiber.to_json();
            if *homology {
                homology_cap(cli.max_n, y.n())?;
                v["homology"] = contractibility(&order_complex(&fiber))?.to_json();
            }
            Outcome::Json(v)
        }
        Command::Cofinal { functor, n } => {
            homology_cap(cli.max_n, *n)?;
            let report = cofinality_report(&Projection::new(*functor, *n)?.map)?;
            if report.all_acyclic() {
                Outcome::Json(report.to_json())
            } else {
                Outcome::Failed(report.to_json())
            }
        }
        Command::CubeEmbed { word } => Outcome::Json(json!(f_embed(word))),
        Command::Chart { kind, config } => Outcome::Json(chart(*kind, &config.parse::<Configuration>()?).to_json()),
        Command::Stratum { path, space } => {
            Outcome::Json(json!(identify_stratum(&path.parse::<EpsilonPath>()?, *space)?.to_string()))
        }
        Command::Verify { suite } => {
            let reports = run_suite(*suite);
            let passed = reports.iter().all(|r| r.passed);
            let v = json!({
                "suite": suite.to_string(),
                "passed": passed,
                "criteria": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            if passed {
                Outcome::Json(v)
            } else {
                Outcome::Failed(v)
            }
        }
    })
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Invariant(_) => "invariant",
        Error::Precondition(_) => "precondition",
        Error::CapExceeded { .. } => "cap-exceeded",
    }
}

/// Write the payload; a closed pipe is not an error.
fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", json!({ "error": "io", "message": e.to_string() }));
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(cap) = cli.max_n {
        eprintln!("warning: size cap set to n = {cap}; large values can take a long time and a lot of memory");
        std::env::set_var("POLYFACES_MAX_N", cap.to_string());
    }
    match run(&cli) {
        Ok(Outcome::Json(v)) => {
            let text = serde_json::to_string_pretty(&v).expect("JSON values serialize");
            emit(&format!("{text}\n"))
        }
        Ok(Outcome::Text(s)) => {
            emit(&s)
        }
        Ok(Outcome::Failed(v)) => {
            eprintln!("{}", json!({ "error": "check-failed", "report": v }));
            ExitCode::FAILURE
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": error_kind(&e), "message": e.to_string() }));
            ExitCode::FAILURE
        }
    }
}
