//! Command-line front end. Every command writes one document to stdout;
//! diagnostics go to stderr. Exit codes: 0 answer, 1 infeasible or
//! rejected, 2 usage or input errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::approx::approx_solve;
use crate::catalog::PatternGraph;
use crate::engine::{solve_decision, solve_optimize};
use crate::generate::{generate_planted, GeneratorSpec};
use crate::graph::{parse_graph, Graph, VertexSet};
use crate::oracle::{brute_force_opt, verify_solution};
use crate::profile::ProblemProfile;
use crate::recognize::{is_member, minimal_obstruction_peel, GraphClass};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest input the brute-force oracle accepts without `--force`.
const ORACLE_LIMIT: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "scattered",
    version,
    about = "Delete few vertices so every component lands in one of two graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Problem profile, e.g. claw-triangle or interval-tree.
    #[arg(long)]
    profile: String,
    /// Graph file (edge list or JSON); `-` reads stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether at most K deletions suffice.
    Solve {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        k: usize,
    },
    /// Find a minimum deletion set.
    Optimize {
        #[command(flatten)]
        inst: InstanceArgs,
    },
    /// Polynomial-time approximation with its packing certificate.
    Approx {
        #[command(flatten)]
        inst: InstanceArgs,
    },
    /// Check a deletion set.
    Verify {
        #[command(flatten)]
        inst: InstanceArgs,
        /// JSON object with "solution", a JSON array, or whitespace-separated integers.
        #[arg(long)]
        solution: PathBuf,
    },
    /// Exact optimum by exhaustive search (small inputs only).
    Oracle {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Largest deletion set to try; defaults to n.
        #[arg(long)]
        cap: Option<usize>,
        /// Run even when the graph has more than 20 vertices.
        #[arg(long)]
        force: bool,
    },
    /// Test class membership and print a minimal obstruction when absent.
    Recognize {
        #[arg(long)]
        class: String,
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
    /// Generate an instance with a planted feasible deletion set.
    Generate {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        planted: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit JSON instead of the edge-list format.
        #[arg(long)]
        json: bool,
    },
    /// Print a catalog pattern.
    DumpPattern {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_text(&mut self, path: &Path) -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("reading stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
    }

    fn read_graph(&mut self, path: &Path) -> Result<Graph, Failure> {
        let text = self.read_text(path)?;
        parse_graph(&text).map_err(|e| usage(format!("{}: {e}", source_name(path))))
    }

    fn emit<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let text = serde_json::to_string(value).expect("output types serialize");
        self.emit_text(&format!("{text}\n"))
    }

    fn emit_text(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("writing output: {e}")))
    }
}

fn source_name(path: &Path) -> String {
    if path.as_os_str() == "-" {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    }
}

fn profile(name: &str) -> Result<ProblemProfile, Failure> {
    ProblemProfile::named(name).map_err(|e| usage(e.to_string()))
}

/// Reads a deletion set: `{"solution": [...]}`, `[...]`, or bare integers.
pub fn parse_solution(text: &str) -> Result<VertexSet, String> {
    let t = text.trim();
    if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| e.to_string())?;
        let arr = v
            .get("solution")
            .ok_or("JSON object has no \"solution\" field")?;
        return serde_json::from_value::<Vec<usize>>(arr.clone())
            .map(VertexSet::from_iter)
            .map_err(|e| e.to_string());
    }
    if t.starts_with('[') {
        return serde_json::from_str::<Vec<usize>>(t)
            .map(VertexSet::from_iter)
            .map_err(|e| e.to_string());
    }
    t.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| format!("invalid vertex {tok:?}"))
        })
        .collect()
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Result<i32, Failure> {
    match cmd {
        Command::Solve { inst, k } => {
            let p = profile(&inst.profile)?;
            let g = io.read_graph(&inst.input)?;
            let r = solve_decision(&g, k, &p).map_err(|e| usage(e.to_string()))?;
            io.emit(&r)?;
            Ok(if r.feasible { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Optimize { inst } => {
            let p = profile(&inst.profile)?;
            let g = io.read_graph(&inst.input)?;
            let r = solve_optimize(&g, &p).map_err(|e| usage(e.to_string()))?;
            io.emit(&r)?;
            Ok(EXIT_OK)
        }
        Command::Approx { inst } => {
            let p = profile(&inst.profile)?;
            let g = io.read_graph(&inst.input)?;
            let r = approx_solve(&g, &p).map_err(|e| usage(e.to_string()))?;
            io.emit(&r)?;
            Ok(EXIT_OK)
        }
        Command::Verify { inst, solution } => {
            let p = profile(&inst.profile)?;
            let g = io.read_graph(&inst.input)?;
            let text = io.read_text(&solution)?;
            let s = parse_solution(&text)
                .map_err(|e| usage(format!("{}: {e}", source_name(&solution))))?;
            if let Some(v) = s.iter().find(|&v| v >= g.n()) {
                return Err(usage(format!("solution vertex {v} out of range")));
            }
            let valid = verify_solution(&g, &s, &p);
            io.emit(&json!({ "profile": p.name, "valid": valid, "solution": s }))?;
            Ok(if valid { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Oracle { inst, cap, force } => {
            let p = profile(&inst.profile)?;
            let g = io.read_graph(&inst.input)?;
            if g.n() > ORACLE_LIMIT && !force {
                return Err(usage(format!(
                    "graph has {} vertices; the oracle needs --force above {ORACLE_LIMIT}",
                    g.n()
                )));
            }
            match brute_force_opt(&g, &p, cap.unwrap_or(g.n())) {
                Ok((value, s)) => {
                    io.emit(&json!({
                        "profile": p.name,
                        "feasible": true,
                        "value": value,
                        "solution": s,
                    }))?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    io.emit(&json!({ "profile": p.name, "feasible": false, "cap": e.cap }))?;
                    Ok(EXIT_INFEASIBLE)
                }
            }
        }
        Command::Recognize { class, input } => {
            let c: GraphClass = class
                .parse()
                .map_err(|e: crate::recognize::UnknownClass| usage(e.to_string()))?;
            let g = io.read_graph(&input)?;
            let member = is_member(&g, c);
            let witness = (!member).then(|| minimal_obstruction_peel(&g, c).expect("non-member"));
            io.emit(&json!({ "class": c.name(), "member": member, "witness": witness }))?;
            Ok(EXIT_OK)
        }
        Command::Generate {
            profile: name,
            n,
            planted,
            density,
            seed,
            json,
        } => {
            let spec = GeneratorSpec {
                profile: name,
                n,
                planted_k: planted,
                edge_density: density,
                seed,
            };
            let (g, planted) = generate_planted(&spec).map_err(|e| usage(e.to_string()))?;
            if json {
                let doc = json!({
                    "n": g.n(),
                    "edges": g.to_json().edges,
                    "planted": planted,
                    "spec": spec,
                });
                io.emit(&doc)?;
            } else {
                let ids: Vec<String> = planted.iter().map(|v| v.to_string()).collect();
                io.emit_text(&format!(
                    "# planted: {}\n{}",
                    ids.join(" "),
                    g.to_edge_list()
                ))?;
            }
            Ok(EXIT_OK)
        }
        Command::DumpPattern { name, json } => {
            let p = PatternGraph::by_name(&name)
                .ok_or_else(|| usage(format!("unknown pattern `{name}`")))?;
            if json {
                let doc =
                    json!({ "name": p.name(), "n": p.order(), "edges": p.graph().to_json().edges });
                io.emit(&doc)?;
            } else {
                io.emit_text(&format!("# {}\n{}", p.name(), p.graph().to_edge_list()))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
