//! Command-line surface. [`run`] is the whole program minus process I/O.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hypergraph_homology::homology::{
    graph_likeness, homology, integer_decomposition, orthogonal_decomposition_rational,
};
use hypergraph_homology::spanning_tree::{
    find_spanning_tree_integer, find_spanning_tree_rational, is_integral, verify_tree_axioms,
};
use hypergraph_homology::{Error, OrientedHypergraph, Ring};
use serde_json::{json, Value};

use crate::document::{DocumentError, HypergraphDocument};
use crate::fixtures;
use crate::random::{random_hypergraph, RandomOptions};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Candidate subsets examined by the integer-tree search unless `--limit` is given.
pub const DEFAULT_LIMIT: usize = 100_000;

#[derive(Debug, Parser)]
#[command(name = "hgh", version, about = "Exact homology of oriented hypergraphs")]
pub struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Int,
    Rat,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Int => Ring::Integer,
            RingArg::Rat => Ring::Rational,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a document.
    Validate {
        /// Document path, `-` for stdin.
        file: PathBuf,
    },
    /// H1, H^1 and a cycle basis.
    Homology {
        file: PathBuf,
        #[arg(long, value_enum)]
        ring: RingArg,
    },
    /// Algebraic spanning tree with fundamental cuts and cycles.
    SpanningTree {
        file: PathBuf,
        #[arg(long, value_enum)]
        ring: RingArg,
        /// Also decide whether the rational tree is integral (rational ring only).
        #[arg(long)]
        check_integral: bool,
        /// Candidate subsets to examine (integer ring only).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// The five graph-likeness conditions with witnesses.
    Graphlike { file: PathBuf },
    /// Cycle and cut bases with sum and intersection diagnostics.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum)]
        ring: RingArg,
    },
    /// Print a built-in example document.
    Example {
        #[arg(value_parser = fixtures::NAMES)]
        name: String,
    },
    /// Print a seeded pseudo-random document.
    Random {
        #[arg(long)]
        vertices: u32,
        #[arg(long)]
        edges: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        max_arity: u32,
        /// Permit edges with both sides empty.
        #[arg(long)]
        allow_empty_edges: bool,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<String, Outcome> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        stdin.read_to_string(&mut text).map(|_| text)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| Outcome::err(EXIT_NEGATIVE, format!("{}: {e}\n", path.display())))
}

fn load(path: &Path, stdin: &mut dyn Read) -> Result<OrientedHypergraph, Outcome> {
    let text = read_input(path, stdin)?;
    HypergraphDocument::parse(&text)
        .and_then(|d| d.to_hypergraph())
        .map_err(|e| Outcome::err(EXIT_NEGATIVE, format!("{}: {e}\n", path.display())))
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn usage(message: &str) -> Outcome {
    Outcome::err(EXIT_USAGE, format!("error: {message}\n"))
}

fn internal(e: Error) -> Outcome {
    Outcome::err(EXIT_NEGATIVE, format!("error: {e}\n"))
}

/// Runs `argv` (including the program name) against `stdin`.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(&cli, stdin).unwrap_or_else(|o| o),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::err(code, text)
            } else {
                Outcome::out(code, text)
            }
        }
    }
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => {
            let text = read_input(file, stdin)?;
            let doc = HypergraphDocument::parse(&text)
                .map_err(|e| Outcome::err(EXIT_NEGATIVE, format!("{}: {e}\n", file.display())))?;
            let (h, violations) = match doc.to_hypergraph() {
                Ok(h) => (Some(h), Vec::new()),
                Err(DocumentError::Invalid(v)) => (None, v),
                Err(e) => return Err(Outcome::err(EXIT_NEGATIVE, format!("{e}\n"))),
            };
            let code = if violations.is_empty() { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Outcome::out(
                code,
                render(
                    json,
                    report::validation_json(h.as_ref(), &violations),
                    report::validation_text(h.as_ref(), &violations),
                ),
            ))
        }
        Command::Homology { file, ring } => {
            let h = load(file, stdin)?;
            let r = homology(&h, (*ring).into());
            Ok(Outcome::out(
                EXIT_OK,
                render(json, report::homology_json(&r), report::homology_text(&h, &r)),
            ))
        }
        Command::SpanningTree {
            file,
            ring,
            check_integral,
            limit,
        } => match ring {
            RingArg::Rat => {
                if limit.is_some() {
                    return Err(usage("--limit applies to --ring int only"));
                }
                let h = load(file, stdin)?;
                rational_tree(&h, *check_integral, json)
            }
            RingArg::Int => {
                if *check_integral {
                    return Err(usage("--check-integral applies to --ring rat only"));
                }
                let h = load(file, stdin)?;
                integer_tree(&h, limit.unwrap_or(DEFAULT_LIMIT), json)
            }
        },
        Command::Graphlike { file } => {
            let h = load(file, stdin)?;
            let r = graph_likeness(&h).map_err(internal)?;
            let code = if r.is_graph_like() { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Outcome::out(
                code,
                render(json, report::graphlike_json(&r), report::graphlike_text(&h, &r)),
            ))
        }
        Command::Decompose { file, ring } => {
            let h = load(file, stdin)?;
            let out = match ring {
                RingArg::Rat => {
                    let d = orthogonal_decomposition_rational(&h);
                    render(
                        json,
                        report::rational_decomposition_json(&d),
                        report::rational_decomposition_text(&h, &d),
                    )
                }
                RingArg::Int => {
                    let d = integer_decomposition(&h);
                    render(
                        json,
                        report::integer_decomposition_json(&d),
                        report::integer_decomposition_text(&h, &d),
                    )
                }
            };
            Ok(Outcome::out(EXIT_OK, out))
        }
        Command::Example { name } => {
            let doc = fixtures::fixture(name).expect("clap restricts the names");
            Ok(Outcome::out(EXIT_OK, doc.to_json() + "\n"))
        }
        Command::Random {
            vertices,
            edges,
            seed,
            max_arity,
            allow_empty_edges,
        } => {
            let opts = RandomOptions {
                vertices: *vertices,
                edges: *edges,
                max_arity: *max_arity,
                allow_empty_edges: *allow_empty_edges,
            };
            let doc = random_hypergraph(&opts, *seed)
                .map_err(|e| Outcome::err(EXIT_NEGATIVE, format!("error: {e}\n")))?;
            Ok(Outcome::out(EXIT_OK, doc.to_json() + "\n"))
        }
    }
}

fn rational_tree(h: &OrientedHypergraph, check_integral: bool, json: bool) -> Result<Outcome, Outcome> {
    let tree = find_spanning_tree_rational(h);
    let axioms = verify_tree_axioms(h, &tree);
    let integral = check_integral.then(|| is_integral(h, &tree));
    let mut value = report::tree_json(&tree, &axioms);
    let mut text = report::tree_text(h, &tree, &axioms);
    if let Some(integral) = integral {
        value["integral"] = json!(integral);
        text.push_str(&format!("integral: {integral}\n"));
    }
    let code = if axioms.all_passed() && integral != Some(false) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Ok(Outcome::out(code, render(json, value, text)))
}

fn integer_tree(h: &OrientedHypergraph, limit: usize, json: bool) -> Result<Outcome, Outcome> {
    match find_spanning_tree_integer(h, limit) {
        Ok(Some(tree)) => {
            let axioms = verify_tree_axioms(h, &tree);
            let mut value = json!({ "status": "found", "limit": limit });
            value["tree"] = report::tree_json(&tree, &axioms);
            let text = format!("status: found\n{}", report::tree_text(h, &tree, &axioms));
            Ok(Outcome::out(EXIT_OK, render(json, value, text)))
        }
        Ok(None) => {
            let value = json!({ "status": "none", "limit": limit, "tree": null });
            let text = "status: none\nno spanning tree over the integers exists\n".to_string();
            Ok(Outcome::out(EXIT_NEGATIVE, render(json, value, text)))
        }
        Err(Error::SearchLimitExceeded { limit }) => {
            let value = json!({ "status": "limit-exceeded", "limit": limit, "tree": null });
            let text = format!("status: limit-exceeded\nsearch stopped after {limit} candidate subsets\n");
            Ok(Outcome::out(EXIT_LIMIT, render(json, value, text)))
        }
        Err(e) => Err(internal(e)),
    }
}
