use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use stable_cutset::cutset::{audit_claims, find_stable_cutset_avoiding, Witness};
use stable_cutset::dot::{to_dot, to_dot_highlighted, Highlight};
use stable_cutset::gsc::random_gsc;
use stable_cutset::verify::{verify, Check, VerifyOptions, VertexSelector, DEFAULT_CHUNK_SIZE};
use stable_cutset::{find_stable_cutset, from_graph6, to_graph6, GeneratingSequence, Graph, Recognizer};

/// Stable cutsets and graphs glued from triangles and prisms.
#[derive(Parser, Debug)]
#[command(name = "gsc", version)]
struct Cli {
    /// Output format (not every command supports every format).
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a theorem over a graph6 corpus.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        /// Input files; standard input when omitted or "-".
        #[arg(long = "in", num_args = 1..)]
        inputs: Vec<PathBuf>,
        /// With `cor3`, check only these vertices (repeatable).
        #[arg(long = "vertex")]
        vertices: Vec<usize>,
        /// Worker threads.
        #[arg(long, env = "GSC_PARALLELISM", value_parser = clap::value_parser!(u32).range(1..))]
        parallelism: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE, value_parser = parse_positive)]
        chunk_size: usize,
        /// Include the evidence for passing graphs in the report.
        #[arg(long)]
        witnesses: bool,
    },
    /// Find a stable cutset of each input graph.
    Cutset {
        /// Vertex the cutset must not contain.
        #[arg(long)]
        avoid: Option<usize>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Decide membership and print a generating-sequence certificate.
    Recognize {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Random member of the class.
    Gen {
        #[arg(long)]
        pieces: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Evaluate the structural claims 6 to 14.
    Audit {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Translate between formats.
    Convert {
        #[arg(long, value_enum, default_value_t = From::Graph6)]
        from: From,
        #[arg(long, value_enum, default_value_t = To::Dot)]
        to: To,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Dot,
    Graph6,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TheoremArg {
    #[value(name = "1")]
    One,
    #[value(name = "5")]
    Five,
    #[value(name = "cor3")]
    Cor3,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Emit {
    Graph6,
    Dot,
    Sequence,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum From {
    Graph6,
    /// Generating sequence JSON.
    Sequence,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum To {
    Graph6,
    Dot,
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure that ends the run with status 2.
struct Fatal(String);

impl<E: std::fmt::Display> std::convert::From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

type Run = Result<ExitCode, Fatal>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("gsc: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Run {
    let format = cli.format;
    match cli.command {
        Command::Verify { theorem, inputs, vertices, parallelism, chunk_size, witnesses } => {
            let check = match theorem {
                TheoremArg::One => Check::Theorem1,
                TheoremArg::Five => Check::Theorem5,
                TheoremArg::Cor3 if vertices.is_empty() => Check::Corollary3(VertexSelector::Admissible),
                TheoremArg::Cor3 => Check::Corollary3(VertexSelector::Named(vertices)),
            };
            let defaults = VerifyOptions::default();
            let opts = VerifyOptions {
                parallelism: parallelism.map_or(defaults.parallelism, |p| p as usize),
                chunk_size,
                record_witnesses: witnesses,
                ..defaults
            };
            cmd_verify(&check, &inputs, opts, format)
        }
        Command::Cutset { avoid, input } => cmd_cutset(avoid, input.as_deref(), format),
        Command::Recognize { input } => cmd_recognize(input.as_deref(), format),
        Command::Gen { pieces, seed, emit } => cmd_gen(pieces, seed, emit),
        Command::Audit { input } => cmd_audit(input.as_deref(), format),
        Command::Convert { from, to, input } => cmd_convert(from, to, input.as_deref()),
    }
}

fn open(path: Option<&Path>) -> Result<Box<dyn BufRead>, Fatal> {
    match path {
        None => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) if p == Path::new("-") => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => {
            let f = File::open(p).map_err(|e| Fatal(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufReader::new(f)))
        }
    }
}

/// Non-blank graph6 lines of the input, parsed, with their 1-based line numbers.
fn read_graphs(path: Option<&Path>) -> Result<Vec<(usize, Graph)>, Fatal> {
    let mut out = Vec::new();
    for (i, line) in open(path)?.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = from_graph6(text).map_err(|e| Fatal(format!("line {}: {e}", i + 1)))?;
        out.push((i + 1, g));
    }
    Ok(out)
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Fatal> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn reject(format: Format, allowed: &[Format], command: &str) -> Result<(), Fatal> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Fatal(format!("{command} does not support --format {format:?}").to_lowercase()))
    }
}

fn cmd_verify(check: &Check, inputs: &[PathBuf], mut opts: VerifyOptions, format: Format) -> Run {
    reject(format, &[Format::Json, Format::Text], "verify")?;
    let sources: Vec<Option<&Path>> =
        if inputs.is_empty() { vec![None] } else { inputs.iter().map(|p| Some(p.as_path())).collect() };
    let (mut failed, mut malformed) = (false, false);
    for src in sources {
        opts.corpus = src.map_or_else(|| "stdin".to_string(), |p| p.display().to_string());
        let mut read_error = None;
        let lines = open(src)?.lines().map_while(|l| l.map_err(|e| read_error = Some(e)).ok());
        let report = verify(check, lines, &opts);
        if let Some(e) = read_error {
            return Err(Fatal(format!("{}: {e}", opts.corpus)));
        }
        match format {
            Format::Text => print!("{}", report.summary()),
            _ => {
                eprint!("{}", report.summary());
                print_json(&report)?;
            }
        }
        failed |= report.failed > 0;
        malformed |= !report.parse_errors.is_empty();
    }
    Ok(ExitCode::from(verify_status(malformed, failed)))
}

/// Malformed input outranks counterexamples.
fn verify_status(malformed: bool, failed: bool) -> u8 {
    match (malformed, failed) {
        (true, _) => 2,
        (false, true) => 1,
        (false, false) => 0,
    }
}

fn cmd_cutset(avoid: Option<usize>, input: Option<&Path>, format: Format) -> Run {
    reject(format, &[Format::Json, Format::Text, Format::Dot], "cutset")?;
    for (line, g) in read_graphs(input)? {
        let found = match avoid {
            Some(x) if x >= g.n() => {
                return Err(Fatal(format!("line {line}: vertex {x} out of range for order {}", g.n())))
            }
            Some(x) => find_stable_cutset_avoiding(&g, x),
            None => find_stable_cutset(&g),
        };
        match (format, found) {
            (Format::Dot, found) => {
                let hl = found.map(|c| Highlight::vertices(c.cutset)).unwrap_or_default();
                print!("{}", to_dot_highlighted(&g, &hl));
            }
            (Format::Text, Some(c)) => println!("cutset {:?} sides {:?} {:?}", c.cutset, c.side_a, c.side_b),
            (Format::Text, None) => println!("none"),
            (_, Some(c)) => print_json(&c)?,
            (_, None) => println!("\"none\""),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_recognize(input: Option<&Path>, format: Format) -> Run {
    reject(format, &[Format::Json, Format::Text], "recognize")?;
    let recognizer = Recognizer::new();
    for (line, g) in read_graphs(input)? {
        let result = recognizer.recognize(&g).map_err(|e| Fatal(format!("line {line}: {e}")))?;
        match format {
            Format::Text => match &result.certificate {
                Some(c) => println!("member ({} pieces)", c.len()),
                None => println!("non-member"),
            },
            _ => print_json(&result)?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(pieces: usize, seed: u64, emit: Emit) -> Run {
    let seq = random_gsc(pieces, seed)?;
    let g = seq.build()?;
    match emit {
        Emit::Graph6 => println!("{}", to_graph6(&g)?),
        Emit::Dot => print!("{}", to_dot(&g)),
        Emit::Sequence => print_json(&seq)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn audit_highlight(audit: &stable_cutset::cutset::ClaimAudit) -> Highlight {
    let mut hl = Highlight::default();
    for w in audit.claims.iter().filter_map(|c| c.witness.as_ref()) {
        match w {
            Witness::CliqueCutset { cutset } => hl.vertices = hl.vertices.union(cutset.clique),
            Witness::Separator { vertices } => hl.vertices = hl.vertices.union(*vertices),
            Witness::P3Cutset { cutset } => hl.vertices = hl.vertices.union(cutset.separation.cutset),
            Witness::MatchingCut { cut } => hl.edges.extend(cut.crossing.iter().copied()),
            _ => {}
        }
    }
    hl
}

fn cmd_audit(input: Option<&Path>, format: Format) -> Run {
    reject(format, &[Format::Json, Format::Text, Format::Dot], "audit")?;
    for (line, g) in read_graphs(input)? {
        let audit = audit_claims(&g).map_err(|e| Fatal(format!("line {line}: {e}")))?;
        match format {
            Format::Dot => print!("{}", to_dot_highlighted(&g, &audit_highlight(&audit))),
            Format::Text => {
                for c in &audit.claims {
                    let w = c.witness.as_ref().map(|w| format!(" {}", json!(w))).unwrap_or_default();
                    println!("claim {}: {}{w}", c.claim, c.holds);
                }
            }
            _ => print_json(&audit)?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_convert(from: From, to: To, input: Option<&Path>) -> Run {
    let graphs: Vec<Graph> = match from {
        From::Graph6 => read_graphs(input)?.into_iter().map(|(_, g)| g).collect(),
        From::Sequence => {
            let mut text = String::new();
            open(input)?.read_to_string(&mut text)?;
            let seq: GeneratingSequence = serde_json::from_str(&text)?;
            vec![seq.build()?]
        }
    };
    let mut out = io::stdout().lock();
    for g in graphs {
        match to {
            To::Graph6 => writeln!(out, "{}", to_graph6(&g)?)?,
            To::Dot => write!(out, "{}", to_dot(&g))?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_exit_status() {
        assert_eq!(verify_status(false, false), 0);
        assert_eq!(verify_status(false, true), 1);
        assert_eq!(verify_status(true, false), 2);
        assert_eq!(verify_status(true, true), 2);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
