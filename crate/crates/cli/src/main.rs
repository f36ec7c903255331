use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sp4braid::braid::{normal_form, parse_braid};
use sp4braid::engine::Engine;
use sp4braid::ring::Ring;
use sp4braid::verify::{run, RunConfig, Suite};
use sp4braid::Error;

const EXIT_DISTINCT: u8 = 1;
const EXIT_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;

/// Braid group calculator and Sp4 / Steinberg relation checker.
#[derive(Debug, Parser)]
#[command(name = "sp4braid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of strands.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u16).range(1..))]
    strands: u16,

    /// Coefficient ring, `int` or `zmod:<m>`; repeat for several rings.
    #[arg(long = "ring", global = true, value_parser = parse_ring)]
    rings: Vec<Ring>,

    /// Random (u, v) samples per parametrized relator.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    samples: u32,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// garside, oracle or both.
    #[arg(long, global = true, default_value = "both")]
    engine: Engine,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the left normal form of a braid word.
    Nf { word: String },
    /// Decide whether two braid words are equal.
    Eq { left: String, right: String },
    /// Run a verification suite.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let strands = usize::from(cli.strands);
    match &cli.command {
        Command::Nf { word } => nf(word, strands, cli.format),
        Command::Eq { left, right } => eq(left, right, strands, cli.engine, cli.format),
        Command::Verify { suite } => {
            let defaults = RunConfig::default();
            let config = RunConfig {
                strands,
                rings: if cli.rings.is_empty() { defaults.rings } else { cli.rings.clone() },
                samples: cli.samples as usize,
                seed: cli.seed,
                engine: cli.engine,
            };
            verify(*suite, &config, cli.format)
        }
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        Error::EngineDisagreement(_) => EXIT_DISAGREEMENT,
        _ => EXIT_PARSE,
    })
}

fn nf(word: &str, strands: usize, format: Format) -> ExitCode {
    let nf = match parse_braid(word, strands).map(|w| normal_form(&w)) {
        Ok(nf) => nf,
        Err(e) => return fail(&e),
    };
    let factors: Vec<String> = nf.factors().iter().map(|f| f.to_word().to_string()).collect();
    match format {
        Format::Text => {
            println!("inf {}", nf.infimum());
            println!("factors {}", factors.len());
            for f in &factors {
                println!("  {f}");
            }
        }
        Format::Structured => {
            println!("{}", serde_json::json!({ "infimum": nf.infimum(), "factors": factors }));
        }
    }
    ExitCode::SUCCESS
}

fn eq(left: &str, right: &str, strands: usize, engine: Engine, format: Format) -> ExitCode {
    let words = parse_braid(left, strands).and_then(|l| Ok((l, parse_braid(right, strands)?)));
    let (l, r) = match words {
        Ok(w) => w,
        Err(e) => return fail(&e),
    };
    let equal = match engine.equal(&l, &r) {
        Ok(b) => b,
        Err(e) => return fail(&e),
    };
    let verdict = if equal { "equal" } else { "distinct" };
    match format {
        Format::Text => println!("{verdict}"),
        Format::Structured => println!("{}", serde_json::json!({ "result": verdict, "engine": engine.to_string() })),
    }
    if equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISTINCT)
    }
}

fn verify(suite: Suite, config: &RunConfig, format: Format) -> ExitCode {
    let report = match run(suite, config) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Structured => print!("{}", report.to_structured()),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}
