use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use treecover::extremal::{
    generate_cycle_triangle, generate_even_extremal, generate_family_f, generate_friendship,
    generate_k_tree, Core, EvenSpec,
};
use treecover::graph::{parse_edge_list, parse_graph6};
use treecover::harness::{
    compute, scan_conjecture_triangle_free, verify_theorems, TheoremId, VerificationReport,
};
use treecover::{Error, Graph};

const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "treecover",
    version,
    about = "Tree cover numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute parameters of one graph and print them as JSON.
    Compute {
        #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
        graph6: Option<String>,
        /// Edge list file: vertex count on the first line, then `u v` pairs.
        #[arg(long)]
        edges: Option<PathBuf>,
        /// Comma-separated, from: n, m, girth, alpha, treewidth, outerplanar,
        /// T, P, Z, Zplus, blocks, extremal, bounds.
        #[arg(long, value_delimiter = ',', default_value = "n,m,T")]
        params: Vec<String>,
    },
    /// Re-verify theorems exhaustively over small graphs.
    Verify {
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        theorems: Vec<String>,
        /// Largest order checked; each theorem's default when omitted.
        #[arg(long)]
        nmax: Option<usize>,
        /// Write the JSON reports here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan a family for counterexamples to a conjecture.
    Scan {
        #[arg(long, value_enum)]
        family: ScanFamily,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a graph and print it in graph6.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        /// Triangles: blocks of an F member, triangles of a friendship graph,
        /// or triangles glued onto an even-extremal core or `F` part.
        #[arg(long, default_value_t = 1)]
        triangles: usize,
        /// Even-extremal shape.
        #[arg(long, value_enum, default_value = "leaf")]
        shape: Shape,
        /// Triangles on the second side of a bridge shape.
        #[arg(long, default_value_t = 1)]
        right: usize,
        /// Cycle length for cycle-triangle graphs and cores.
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print an edge list instead of graph6.
        #[arg(long)]
        edge_list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFamily {
    TriangleFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    #[value(name = "F")]
    F,
    EvenExtremal,
    Friendship,
    Ktree,
    CycleTriangle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Leaf,
    Bridge,
    C4,
    K4MinusE,
    CycleTriangle,
}

fn read_graph(graph6: Option<String>, edges: Option<PathBuf>) -> anyhow::Result<Graph> {
    if let Some(s) = graph6 {
        return Ok(parse_graph6(s.trim())?);
    }
    let path = edges.expect("clap requires one input");
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_edge_list(&text)?)
}

fn emit(value: &serde_json::Value, out: Option<PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => {
            fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn summarise(report: &VerificationReport) {
    eprintln!(
        "{}: {} graphs, {} violations, {:.2}s",
        report.theorem,
        report.graphs_checked,
        report.violations.len(),
        report.runtime_seconds
    );
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Compute {
            graph6,
            edges,
            params,
        } => {
            let g = read_graph(graph6, edges)?;
            let params: Vec<&str> = params.iter().map(|s| s.trim()).collect();
            emit(&compute(&g, &params)?, None)?;
            Ok(0)
        }
        Command::Verify {
            theorems,
            nmax,
            out,
        } => {
            let ids: Vec<TheoremId> = if theorems.iter().any(|t| t == "all") {
                TheoremId::ALL.to_vec()
            } else {
                theorems
                    .iter()
                    .map(|t| t.trim().parse())
                    .collect::<Result<_, _>>()?
            };
            let selection: Vec<(TheoremId, usize)> = ids
                .into_iter()
                .map(|id| (id, nmax.unwrap_or(id.default_nmax())))
                .collect();
            let reports = verify_theorems(&selection)?;
            reports.iter().for_each(summarise);
            emit(&serde_json::to_value(&reports)?, out)?;
            let failed = reports.iter().any(|r| !r.passed());
            Ok(if failed { EXIT_VIOLATION } else { 0 })
        }
        Command::Scan { family, nmax, out } => {
            let report = match family {
                ScanFamily::TriangleFree => scan_conjecture_triangle_free(nmax)?,
            };
            summarise(&report);
            emit(&serde_json::to_value(&report)?, out)?;
            // a counterexample to a conjecture is a finding, not a failure
            Ok(0)
        }
        Command::Gen {
            family,
            triangles,
            shape,
            right,
            r,
            k,
            n,
            seed,
            edge_list,
        } => {
            let g = match family {
                GenFamily::F => generate_family_f(triangles, seed)?,
                GenFamily::Friendship => generate_friendship(triangles)?,
                GenFamily::Ktree => generate_k_tree(k, n, seed)?,
                GenFamily::CycleTriangle => generate_cycle_triangle(r)?,
                GenFamily::EvenExtremal => {
                    let spec = match shape {
                        Shape::Leaf => EvenSpec::Leaf { triangles },
                        Shape::Bridge => EvenSpec::Bridge {
                            left: triangles,
                            right,
                        },
                        Shape::C4 => EvenSpec::K3Chain {
                            core: Core::C4,
                            triangles,
                        },
                        Shape::K4MinusE => EvenSpec::K3Chain {
                            core: Core::K4MinusE,
                            triangles,
                        },
                        Shape::CycleTriangle => EvenSpec::K3Chain {
                            core: Core::CycleTriangle(r),
                            triangles,
                        },
                    };
                    generate_even_extremal(spec, seed)?
                }
            };
            if edge_list {
                print!("{}", g.to_edge_list());
            } else {
                println!("{}", g.to_graph6());
            }
            Ok(0)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::UnsupportedSize { .. } | Error::TooManyVertices { .. }) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
