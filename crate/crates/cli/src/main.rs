//! Command-line front end: graph export, operator application, conversion
//! between realizations and property verification.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use g2crystal::graph::{self, Format};
use g2crystal::iso::{cliff_to_tableau, tableau_to_cliff, theta, theta_inv};
use g2crystal::verify::{self, Options, Suite};
use g2crystal::{
    m_infinity, CliffElement, Crystal, ExtMonomial, Index, MInfElement, MLTableau, Params,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

const DEFAULT_MAX_DEPTH: usize = 12;

#[derive(Parser)]
#[command(
    name = "g2crystal",
    version,
    about = "Crystal B(infinity) of type G2 in three realizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Realization {
    /// b-vectors of the monomial set M(inf), shown in X-variables
    Minf,
    /// arbitrary extended monomials with the generic operators
    Monomial,
    /// marginally large tableaux
    Tableau,
    /// the tensor-product realization
    Cliff,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Dot,
    Json,
}

#[derive(clap::Args)]
struct DepthArgs {
    #[arg(long)]
    depth: usize,
    /// Largest depth accepted without --force.
    #[arg(long, env = "G2CRYSTAL_MAX_DEPTH", default_value_t = DEFAULT_MAX_DEPTH)]
    max_depth: usize,
    #[arg(long)]
    force: bool,
}

#[derive(clap::Args)]
struct ElementArgs {
    /// Read the element from a JSON file.
    #[arg(long, conflicts_with = "element")]
    input: Option<PathBuf>,
    /// The element as a JSON string. Without this or --input, stdin is read.
    #[arg(long)]
    element: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the crystal graph from the highest element.
    Graph {
        #[arg(long, value_enum)]
        realization: Realization,
        #[command(flatten)]
        depth: DepthArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a word such as "f1 f2 e1", left to right.
    Apply {
        #[arg(long, value_enum)]
        realization: Realization,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Convert an element between realizations.
    Convert {
        #[arg(long, value_enum)]
        from: Realization,
        #[arg(long, value_enum)]
        to: Realization,
        #[command(flatten)]
        element: ElementArgs,
    },
    /// Run a property suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        depth: DepthArgs,
        /// Random monomials for the bookkeeping suite.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0x6232)]
        seed: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Violation,
}

type CliResult<T> = Result<T, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

impl DepthArgs {
    fn checked(&self) -> CliResult<usize> {
        if self.depth > self.max_depth && !self.force {
            return Err(usage(format!(
                "depth {} exceeds the cap {} (set G2CRYSTAL_MAX_DEPTH or pass --force)",
                self.depth, self.max_depth
            )));
        }
        Ok(self.depth)
    }
}

impl ElementArgs {
    fn read(&self) -> CliResult<Value> {
        let text = match (&self.input, &self.element) {
            (Some(p), _) => {
                fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?
            }
            (None, Some(s)) => s.clone(),
            (None, None) => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(usage)?;
                s
            }
        };
        serde_json::from_str(&text).map_err(|e| usage(format!("element is not valid JSON: {e}")))
    }
}

fn decode<E: DeserializeOwned>(v: Value) -> CliResult<E> {
    serde_json::from_value(v).map_err(|e| usage(format!("bad element: {e}")))
}

fn decode_tableau(v: Value) -> CliResult<MLTableau> {
    let t: MLTableau = decode(v)?;
    t.validate().map_err(usage)?;
    Ok(t)
}

fn decode_cliff(v: Value) -> CliResult<CliffElement> {
    let c: CliffElement = decode(v)?;
    c.check_member().map_err(usage)?;
    Ok(c)
}

fn to_json<E: Serialize>(e: &E) -> String {
    serde_json::to_string(e).expect("elements serialize")
}

fn graph_text<E: Crystal + Serialize>(
    root: E,
    depth: usize,
    format: OutFormat,
    name: &str,
) -> String {
    let g = graph::bfs(root, depth);
    let format = match format {
        OutFormat::Dot => Format::Dot,
        OutFormat::Json => Format::Json,
    };
    graph::export(&g, format, name)
}

fn realization_name(r: Realization) -> &'static str {
    match r {
        Realization::Minf => "minf",
        Realization::Monomial => "monomial",
        Realization::Tableau => "tableau",
        Realization::Cliff => "cliff",
    }
}

fn cmd_graph(
    r: Realization,
    depth: usize,
    format: OutFormat,
    out: Option<PathBuf>,
) -> CliResult<()> {
    let name = realization_name(r);
    let text = match r {
        Realization::Minf => {
            graph_text(MInfElement::highest(Params::default()), depth, format, name)
        }
        Realization::Monomial => graph_text(m_infinity(), depth, format, name),
        Realization::Tableau => graph_text(MLTableau::highest(), depth, format, name),
        Realization::Cliff => graph_text(CliffElement::default(), depth, format, name),
    };
    match out {
        Some(p) => fs::write(&p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    F(Index),
    E(Index),
}

fn parse_word(word: &str) -> CliResult<Vec<Op>> {
    word.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t {
            "f1" => Ok(Op::F(Index::One)),
            "f2" => Ok(Op::F(Index::Two)),
            "e1" => Ok(Op::E(Index::One)),
            "e2" => Ok(Op::E(Index::Two)),
            _ => Err(usage(format!(
                "unknown operator {t:?}; expected f1, f2, e1 or e2"
            ))),
        })
        .collect()
}

fn apply_word<E: Crystal + Serialize>(x: E, ops: &[Op]) -> String {
    let mut cur = Some(x);
    for &op in ops {
        cur = cur.and_then(|x| match op {
            Op::F(i) => x.f(i),
            Op::E(i) => x.e(i),
        });
    }
    cur.map_or_else(|| "ZERO".to_string(), |x| to_json(&x))
}

fn cmd_apply(r: Realization, word: &str, v: Value) -> CliResult<()> {
    let ops = parse_word(word)?;
    let out = match r {
        Realization::Minf => apply_word(decode::<MInfElement>(v)?, &ops),
        Realization::Monomial => apply_word(decode::<ExtMonomial>(v)?, &ops),
        Realization::Tableau => apply_word(decode_tableau(v)?, &ops),
        Realization::Cliff => apply_word(decode_cliff(v)?, &ops),
    };
    println!("{out}");
    Ok(())
}

/// Every conversion goes through the b-vector form.
fn to_minf(r: Realization, v: Value) -> CliResult<MInfElement> {
    match r {
        Realization::Minf => decode(v),
        Realization::Monomial => {
            let m: ExtMonomial = decode(v)?;
            MInfElement::from_monomial(&m, Params::default()).map_err(usage)
        }
        Realization::Tableau => Ok(theta(&decode_tableau(v)?)),
        Realization::Cliff => Ok(theta(&cliff_to_tableau(&decode_cliff(v)?).map_err(usage)?)),
    }
}

fn from_minf(r: Realization, b: &MInfElement) -> CliResult<String> {
    Ok(match r {
        Realization::Minf => to_json(b),
        Realization::Monomial => to_json(&b.to_monomial()),
        Realization::Tableau => to_json(&theta_inv(b).map_err(usage)?),
        Realization::Cliff => to_json(&tableau_to_cliff(&theta_inv(b).map_err(usage)?)),
    })
}

fn cmd_convert(from: Realization, to: Realization, v: Value) -> CliResult<()> {
    let b = to_minf(from, v)?;
    println!("{}", from_minf(to, &b)?);
    Ok(())
}

fn cmd_verify(suite: Suite, depth: usize, samples: usize, seed: u64) -> CliResult<()> {
    let r = verify::run(
        suite,
        Options {
            depth,
            samples,
            seed,
        },
    );
    let report = serde_json::json!({
        "suite": suite.name(),
        "depth": r.depth,
        "passed": r.passed(),
        "checked": r.checked,
        "violations": r.violations,
        "examples": r.examples,
    });
    println!("{report}");
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Graph {
            realization,
            depth,
            format,
            out,
        } => cmd_graph(realization, depth.checked()?, format, out),
        Command::Apply {
            realization,
            word,
            element,
        } => cmd_apply(realization, &word, element.read()?),
        Command::Convert { from, to, element } => cmd_convert(from, to, element.read()?),
        Command::Verify {
            suite,
            depth,
            samples,
            seed,
        } => cmd_verify(suite, depth.checked()?, samples, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
