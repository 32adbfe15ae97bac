//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when an operation rejects its input, 2 on
//! usage errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};

use crate::arith::{padd, psub};
use crate::error::Error;
use crate::sequences::Count;
use crate::weights::{self, compose, NestWeights};
use crate::word::Word;
use crate::{oracle, sequences, table, verify};

const AFTER_HELP: &str =
    "Words use the characters 0, ( and ). Quote them in the shell, e.g. motzkin rank '(0())0'.";

#[derive(Debug, Parser)]
#[command(name = "motzkin", version, about = "Arithmetic of ordered Motzkin words", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the weight (index) of a word
    Rank { word: String },
    /// Print the word with the given weight
    Unrank { index: String },
    /// List the prime pairs of a word with their nest-weights
    Decompose {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a word from bracket positions
    Compose {
        #[arg(long)]
        length: usize,
        /// 1-based positions of a matched pair, as OPEN,CLOSE
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<(usize, usize)>,
    },
    /// Partial addition x ⊕ y
    Add { x: String, y: String },
    /// Partial subtraction x ⊖ y
    Sub { x: String, y: String },
    /// Print a sequence, one value per line
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        #[arg(long)]
        upto: usize,
    },
    /// List all words of a given length in order
    Enumerate {
        #[arg(long)]
        length: usize,
    },
    /// Print the table of prime pairs and nest-weights
    Table {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Cross-check the formulas against brute force
    Verify {
        #[arg(long = "max-len")]
        max_len: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeqName {
    Motzkin,
    Unique,
    Delta,
    DeltaPrime,
}

fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected OPEN,CLOSE, got {text:?}"))?;
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Usage(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn big_number(v: &Count) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("decimal digits"))
}

/// Parses `args` (program name first) and runs one command, writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    let mut text = String::new();
    let result = execute(cli.command, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verify) => {
            let _ = writeln!(err, "error: verification failed");
            1
        }
    }
}

fn execute(command: Command, out: &mut String) -> Result<(), Failure> {
    use std::fmt::Write as _;
    let mut line = |s: &dyn std::fmt::Display| {
        let _ = writeln!(out, "{s}");
    };
    match command {
        Command::Rank { word } => line(&weights::rank(&Word::parse(&word)?)?),
        Command::Unrank { index } => {
            let index: Count = index
                .parse()
                .map_err(|_| Failure::Usage(format!("invalid index {index:?}")))?;
            line(&weights::unrank(&index));
        }
        Command::Decompose { word, json } => {
            let d = weights::decompose(&Word::parse(&word)?)?;
            if json {
                let pairs: Vec<Value> = d
                    .entries
                    .iter()
                    .map(|e| {
                        json!({
                            "n": e.n,
                            "k": e.k,
                            "depth": e.depth,
                            "contribution": big_number(&e.contribution),
                        })
                    })
                    .collect();
                let doc = json!({
                    "length": d.word_length,
                    "pairs": pairs,
                    "total": big_number(&d.total),
                });
                line(&serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                for e in &d.entries {
                    line(&format_args!(
                        "{} {} {} {}",
                        e.n, e.k, e.depth, e.contribution
                    ));
                }
                line(&format_args!("total {}", d.total));
            }
        }
        Command::Compose { length, pairs } => line(&compose(length, &pairs)?),
        Command::Add { x, y } => line(&padd(&Word::parse(&x)?, &Word::parse(&y)?)?),
        Command::Sub { x, y } => line(&psub(&Word::parse(&x)?, &Word::parse(&y)?)?),
        Command::Seq { name, upto } => {
            let values: Vec<Count> = match name {
                SeqName::Motzkin => (0..=upto).map(sequences::motzkin_number).collect(),
                SeqName::Unique => (1..=upto)
                    .map(sequences::unique_count)
                    .collect::<Result<_, _>>()?,
                SeqName::Delta => (1..=upto).map(sequences::delta).collect::<Result<_, _>>()?,
                SeqName::DeltaPrime => (2..=upto)
                    .map(sequences::delta_prime)
                    .collect::<Result<_, _>>()?,
            };
            for v in &values {
                line(v);
            }
        }
        Command::Enumerate { length } => {
            for w in oracle::enumerate_range(length)? {
                line(&w);
            }
        }
        Command::Table { max_n } => {
            let rows = table::rows(&mut NestWeights::new(), max_n)?;
            out.push_str(&table::render(&rows));
        }
        Command::Verify { max_len } => {
            let reports = verify::run(max_len)?;
            let mut all = true;
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                line(&format_args!("{status} {} ({})", r.name, r.detail));
                all &= r.passed;
            }
            if !all {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}
