//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a checked bound failed, 2 bad input,
//! 3 a heuristic horizon did not converge.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complexity::{complexity_table, render_tsv, TableOptions};
use crate::dfao;
use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::rauzy::{build_rauzy_graph, count_quasi_small, CircuitKind, DEFAULT_CIRCUIT_CAP};
use crate::source::{choose_horizon, parse_word_specs, HorizonPolicy, WordSpec};
use crate::verify::{self, TheoremReport, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSTABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lieword",
    version,
    about = "Lie complexity of words and Rauzy graph circuits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print C, L, eL, p, pL, dpL and Qs for n = 0..=n-max.
    Table {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        compute: ComputeArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Build the Rauzy graph of level n and classify its elementary circuits.
    Rauzy {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        compute: ComputeArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Also write the graph in DOT form to this file.
        #[arg(long, value_name = "PATH")]
        dot: Option<String>,
    },
    /// Check the bounds on one word, or on the built-in corpus.
    Verify {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Seed for the random part of the corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random finite words in the corpus.
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, hide = true, default_value_t = 0)]
        inject_lie_fault: i64,
    },
    /// Evaluate automata.
    Dfao {
        #[command(subcommand)]
        action: DfaoCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum DfaoCommand {
    /// Print the outputs for n or for the inclusive range a..b.
    Eval { file: String, range: String },
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Word specification, e.g. 'power aba' or 'morphic 0 0->01 1->10'.
    #[arg(long, conflicts_with = "word_file")]
    pub word: Option<String>,
    /// File of word specifications, one per line.
    #[arg(long, value_name = "PATH")]
    pub word_file: Option<String>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Minimum heuristic horizon H0.
    #[arg(long, env = "LIEWORD_HORIZON", default_value_t = HorizonPolicy::DEFAULT_FLOOR)]
    pub horizon: usize,
    /// Heuristic horizon per unit of n.
    #[arg(long, default_value_t = HorizonPolicy::DEFAULT_MULTIPLIER)]
    pub horizon_multiplier: usize,
    /// Maximum number of elementary circuits enumerated per graph.
    #[arg(long, default_value_t = DEFAULT_CIRCUIT_CAP)]
    pub cap: usize,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Dot,
}

impl ComputeArgs {
    fn options(&self, n_max: usize) -> Result<TableOptions> {
        if self.horizon < n_max + 2 {
            return Err(Error::InvalidSpec(format!(
                "horizon {} is below n-max + 2 = {}",
                self.horizon,
                n_max + 2
            )));
        }
        Ok(TableOptions {
            policy: HorizonPolicy {
                floor: self.horizon,
                multiplier: self.horizon_multiplier,
            },
            circuit_cap: self.cap,
            strategy: if self.sequential {
                Strategy::Sequential
            } else {
                Strategy::Parallel
            },
        })
    }
}

impl WordArgs {
    /// `None` when neither flag was given.
    fn specs(&self) -> Result<Option<Vec<(String, WordSpec)>>> {
        if let Some(text) = &self.word {
            let spec = WordSpec::parse(text)?;
            return Ok(Some(vec![(spec.to_string(), spec)]));
        }
        let Some(path) = &self.word_file else {
            return Ok(None);
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("cannot read {path}: {e}")))?;
        let specs = parse_word_specs(&text)?;
        if specs.is_empty() {
            return Err(Error::InvalidSpec(format!("{path} contains no word")));
        }
        Ok(Some(
            specs.into_iter().map(|s| (s.to_string(), s)).collect(),
        ))
    }

    fn single(&self) -> Result<WordSpec> {
        match self.specs()? {
            Some(mut specs) if specs.len() == 1 => Ok(specs.remove(0).1),
            Some(_) => Err(Error::InvalidSpec("expected exactly one word".into())),
            None => Err(Error::InvalidSpec("give --word or --word-file".into())),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnstableHorizon { .. } => EXIT_UNSTABLE,
        _ => EXIT_INPUT,
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli.command, err) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: &Command, err: &mut dyn Write) -> Result<(String, i32)> {
    match command {
        Command::Table {
            word,
            n_max,
            compute,
            format,
        } => {
            let spec = word.single()?;
            let rows = complexity_table(&spec, *n_max, &compute.options(*n_max)?)?;
            let text = match format {
                Format::Tsv => render_tsv(&rows),
                Format::Json => json(&rows),
                Format::Dot => return Err(Error::InvalidSpec("table has no dot format".into())),
            };
            Ok((text, EXIT_OK))
        }
        Command::Rauzy {
            word,
            n,
            compute,
            format,
            dot,
        } => {
            let spec = word.single()?;
            rauzy(&spec, *n, compute, *format, dot.as_deref(), err)
        }
        Command::Verify {
            word,
            n_max,
            compute,
            seed,
            random,
            format,
            inject_lie_fault,
        } => {
            let options = VerifyOptions {
                table: compute.options(*n_max)?,
                lie_fault: *inject_lie_fault,
            };
            let (words, corpus) = match word.specs()? {
                Some(words) => (words, false),
                None => (verify::corpus(*seed, *random), true),
            };
            let mut reports = verify::check_corpus(&words, *n_max, &options)?;
            if corpus && *n_max > 0 {
                reports.extend(verify::check_lemma_size(2, (*n_max).min(8)).rows());
            }
            let failures: Vec<&TheoremReport> = reports.iter().filter(|r| r.is_failure()).collect();
            for r in &failures {
                let _ = writeln!(
                    err,
                    "FAIL {} {} n={} lhs={} rhs={} margin={}",
                    r.word_id, r.theorem_id, r.n, r.lhs, r.rhs, r.margin
                );
            }
            let code = if failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            };
            let text = match format {
                Format::Json => json(&reports),
                Format::Tsv => verify_tsv(&reports),
                Format::Dot => return Err(Error::InvalidSpec("verify has no dot format".into())),
            };
            Ok((text, code))
        }
        Command::Dfao {
            action: DfaoCommand::Eval { file, range },
        } => {
            let machine = dfao::load(file)?;
            let (a, b) = parse_range(range)?;
            let values: Vec<String> = (a..=b).map(|n| machine.eval(n).to_string()).collect();
            Ok((values.join(" ") + "\n", EXIT_OK))
        }
    }
}

fn verify_tsv(reports: &[TheoremReport]) -> String {
    let mut s = String::from("word\ttheorem\tn\tlhs\trhs\tmargin\tholds\tasserted\n");
    for r in reports {
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.word_id, r.theorem_id, r.n, r.lhs, r.rhs, r.margin, r.holds, r.asserted
        );
    }
    s
}

#[derive(Serialize)]
struct CircuitOut {
    root: String,
    size: usize,
    kind: CircuitKind,
}

#[derive(Serialize)]
struct RauzyOut {
    level: usize,
    vertices: Vec<String>,
    edges: Vec<String>,
    circuits: Vec<CircuitOut>,
    quasi_small: usize,
    bound: i64,
}

fn rauzy(
    spec: &WordSpec,
    n: usize,
    compute: &ComputeArgs,
    format: Format,
    dot_path: Option<&str>,
    err: &mut dyn Write,
) -> Result<(String, i32)> {
    if n == 0 {
        return Err(Error::InvalidSpec("Rauzy graphs start at level 1".into()));
    }
    let options = compute.options(n)?;
    let horizon = choose_horizon(spec, n + 1, &options.policy);
    let graph = build_rauzy_graph(spec, n, horizon)?;
    let circuits = graph.elementary_circuits(options.circuit_cap)?;
    if !horizon.is_exact() {
        let doubled = build_rauzy_graph(spec, n, horizon.doubled())?;
        if doubled != graph {
            return Err(Error::UnstableHorizon {
                quantity: "Rauzy graph",
                n,
                horizon: horizon.length,
                at_horizon: format!("{} edges", graph.edges().len()),
                at_double: format!("{} edges", doubled.edges().len()),
            });
        }
    }
    let alphabet = spec.alphabet();
    let dot = graph.to_dot(alphabet);
    if let Some(path) = dot_path {
        std::fs::write(path, &dot).map_err(|e| Error::Io(format!("cannot write {path}: {e}")))?;
    }
    let summary = graph.summary(&circuits);
    let text = match format {
        Format::Dot => {
            let _ = writeln!(err, "{summary}");
            dot
        }
        Format::Tsv => {
            let mut s = String::from("root\tsize\tkind\n");
            for c in &circuits {
                let _ = writeln!(s, "{}\t{}\t{:?}", alphabet.render(&c.root), c.size, c.kind);
            }
            s + &summary + "\n"
        }
        Format::Json => json(&RauzyOut {
            level: n,
            vertices: graph
                .vertices()
                .iter()
                .map(|v| alphabet.render(v))
                .collect(),
            edges: graph
                .edges()
                .iter()
                .map(|e| alphabet.render(&e.label))
                .collect(),
            circuits: circuits
                .iter()
                .map(|c| CircuitOut {
                    root: alphabet.render(&c.root),
                    size: c.size,
                    kind: c.kind,
                })
                .collect(),
            quasi_small: count_quasi_small(&circuits),
            bound: graph.edges().len() as i64 - graph.vertices().len() as i64 + 1,
        }),
    };
    Ok((text, EXIT_OK))
}

/// `n` or the inclusive range `a..b`.
fn parse_range(text: &str) -> Result<(u64, u64)> {
    let num = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidSpec(format!("not a natural number: {s:?}")))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(Error::InvalidSpec(format!("empty range {text}")));
            }
            Ok((a, b))
        }
        None => {
            let n = num(text)?;
            Ok((n, n))
        }
    }
}
