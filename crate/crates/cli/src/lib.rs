//! The `csf` command-line tool. [`run`] holds all of the behaviour so that
//! tests can drive it without spawning a process.
//!
//! Exit codes: 0 on success, 1 when `check` finds the graph not positive,
//! 2 on usage or input errors, 3 when `corpus verify` finds a mismatch.

pub mod corpus;
pub mod display;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use csf_core::{
    csf_in_basis, e_positivity_verdict, parse_graph, schur_coefficient, schur_coefficient_terms,
    schur_positivity_verdict, Basis, Graph, GraphAnalysis, GraphFormat, Partition,
    PositivityVerdict, Strategy, DEFAULT_EDGE_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_POSITIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CORPUS_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "csf",
    version,
    about = "Chromatic symmetric functions of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand X_G in one basis.
    Expand {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Largest edge count accepted by the power-sum expansion.
        #[arg(long, env = "CSF_EDGE_CAP", default_value_t = DEFAULT_EDGE_CAP)]
        edge_cap: usize,
    },
    /// Print a single Schur coefficient.
    Coeff {
        #[command(flatten)]
        graph: GraphArgs,
        /// Shape as comma-separated parts, e.g. 3,3,2.
        #[arg(long)]
        shape: Partition,
        /// List the contribution of every special rim hook tabloid.
        #[arg(long)]
        explain: bool,
    },
    /// Decide Schur or e-positivity and print a certificate.
    Check {
        #[arg(value_enum)]
        property: PropertyArg,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = StrategyArg::Fast)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Count stable partitions by type.
    Census {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Work with the built-in reference expansions.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    /// Recompute every reference expansion and compare.
    Verify {
        #[arg(long)]
        id: Option<String>,
    },
    /// Print the fixtures as JSON.
    Export,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Family spec such as `fan:2,6` (optionally prefixed by `family`), a
    /// graph6 or edge-list string with --input-format, or `-` for stdin.
    #[arg(long, num_args = 1.., required = true)]
    graph: Vec<String>,
    /// Format of the graph text. Defaults to `family`, or `graph6` for stdin.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Family,
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    P,
    E,
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PropertyArg {
    Schur,
    E,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Fast,
    Exhaustive,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<csf_core::Error> for Failure {
    fn from(e: csf_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn load_graph(args: &GraphArgs, stdin: &mut dyn Read) -> Result<(String, Graph), Failure> {
    let joined = args.graph.join(" ");
    if joined == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        let format = args.input_format.unwrap_or(InputFormat::Graph6);
        let g = parse_graph(text.trim_end(), graph_format(format))?;
        return Ok(("stdin".into(), g));
    }
    let spec = joined
        .strip_prefix("family ")
        .map_or(joined.as_str(), str::trim);
    let format = args.input_format.unwrap_or(InputFormat::Family);
    let text = match format {
        // edge lists on the command line may use `;` between edges
        InputFormat::EdgeList => spec.replace(';', "\n"),
        _ => spec.to_string(),
    };
    Ok((spec.to_string(), parse_graph(&text, graph_format(format))?))
}

fn graph_format(f: InputFormat) -> GraphFormat {
    match f {
        InputFormat::Family => GraphFormat::FamilyDsl,
        InputFormat::Graph6 => GraphFormat::Graph6,
        InputFormat::EdgeList => GraphFormat::EdgeList,
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Expand {
            graph,
            basis,
            format,
            edge_cap,
        } => {
            let (label, g) = load_graph(&graph, stdin)?;
            let basis = match basis {
                BasisArg::M => Basis::Monomial,
                BasisArg::P => Basis::Power,
                BasisArg::E => Basis::Elementary,
                BasisArg::S => Basis::Schur,
            };
            let f = csf_in_basis(&GraphAnalysis::new(g), basis, edge_cap)?;
            match format {
                OutputFormat::Text => writeln!(out, "{}", f.to_text())?,
                OutputFormat::Latex => writeln!(out, "{}", f.to_latex())?,
                OutputFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string(&f.to_json(&label))?)?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Coeff {
            graph,
            shape,
            explain,
        } => {
            let (_, g) = load_graph(&graph, stdin)?;
            let analysis = GraphAnalysis::new(g);
            if explain {
                explain_coefficient(&analysis, &shape, out)?;
            } else {
                writeln!(out, "{}", schur_coefficient(&analysis, &shape)?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            property,
            graph,
            strategy,
            format,
        } => {
            let (_, g) = load_graph(&graph, stdin)?;
            let analysis = GraphAnalysis::new(g);
            let verdict = match property {
                PropertyArg::Schur => {
                    let strategy = match strategy {
                        StrategyArg::Fast => Strategy::Fast,
                        StrategyArg::Exhaustive => Strategy::Exhaustive,
                    };
                    schur_positivity_verdict(&analysis, strategy)?
                }
                PropertyArg::E => e_positivity_verdict(&analysis)?,
            };
            if !verdict.verify(analysis.graph())? {
                return Err(csf_core::Error::Internal(format!(
                    "certificate failed its re-check: {verdict:?}"
                ))
                .into());
            }
            print_verdict(&verdict, format, out)?;
            Ok(if verdict.is_positive() {
                EXIT_OK
            } else {
                EXIT_NOT_POSITIVE
            })
        }
        Command::Census { graph, format } => {
            let (_, g) = load_graph(&graph, stdin)?;
            let analysis = GraphAnalysis::new(g);
            let census = analysis.census()?;
            if format == OutputFormat::Json {
                writeln!(out, "{}", serde_json::to_string(&census.to_json())?)?;
            } else {
                for (lambda, count) in census.iter() {
                    writeln!(out, "{lambda}\t{count}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Corpus { action } => match action {
            CorpusAction::Verify { id } => {
                let selected: Vec<&'static corpus::CorpusFixture> = match id {
                    Some(id) => vec![corpus::find(&id).ok_or_else(|| {
                        let ids: Vec<&str> = corpus::FIXTURES.iter().map(|f| f.id).collect();
                        Failure::Usage(format!("no fixture `{id}`; known ids: {}", ids.join(", ")))
                    })?],
                    None => corpus::FIXTURES.iter().collect(),
                };
                let reports = corpus::verify_all(&selected);
                for report in &reports {
                    for line in &report.lines {
                        writeln!(out, "{line}")?;
                    }
                }
                let passed = reports.iter().filter(|r| r.passed).count();
                writeln!(out, "{passed}/{} fixtures passed", reports.len())?;
                Ok(if passed == reports.len() {
                    EXIT_OK
                } else {
                    EXIT_CORPUS_MISMATCH
                })
            }
            CorpusAction::Export => {
                let all: Vec<_> = corpus::FIXTURES.iter().map(|f| f.to_json()).collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&all)?)?;
                Ok(EXIT_OK)
            }
        },
    }
}

fn print_verdict(
    verdict: &PositivityVerdict,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if format == OutputFormat::Json {
        writeln!(out, "{}", serde_json::to_string(verdict)?)?;
    } else {
        let property = serde_json::to_value(verdict.property)?;
        let answer = serde_json::to_value(verdict.answer)?;
        writeln!(
            out,
            "{}: {}",
            property.as_str().unwrap_or(""),
            answer.as_str().unwrap_or("")
        )?;
        writeln!(
            out,
            "certificate: {}",
            serde_json::to_string(&verdict.certificate)?
        )?;
    }
    Ok(())
}

fn explain_coefficient(
    analysis: &GraphAnalysis,
    shape: &Partition,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let terms = schur_coefficient_terms(analysis, shape)?;
    let total_tabloids = csf_core::special_tabloids(shape).len();
    let alpha = analysis.independence_number()?;
    writeln!(
        out,
        "{:<16} {:<10} {:>3} {:>8} {:>10} {:>12}",
        "pi(T)", "W(T)", "|W|", "pi^!", "N_G", "term"
    )?;
    let mut total = num_bigint::BigInt::default();
    for t in &terms {
        let positions: Vec<String> = t
            .tabloid
            .even_span_positions()
            .iter()
            .map(usize::to_string)
            .collect();
        writeln!(
            out,
            "{:<16} {:<10} {:>3} {:>8} {:>10} {:>12}",
            format!("({})", t.tabloid.content()),
            format!("{{{}}}", positions.join(",")),
            t.tabloid.even_span_count(),
            t.multiplicity_factorial,
            t.stable_count,
            format!("{:+}", t.value),
        )?;
        total += &t.value;
    }
    let skipped = total_tabloids - terms.len();
    if skipped > 0 {
        writeln!(
            out,
            "skipped {skipped} tabloid(s) with a hook longer than alpha(G) = {alpha}"
        )?;
    }
    writeln!(out, "coefficient of s_{{{}}}: {total}", shape.subscript())?;
    Ok(())
}
