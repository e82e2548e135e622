use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sttilt::input::{parse_seed, InputDocument, Overrides, Problem};
use sttilt::report::exit_code;
use sttilt::{cmd_enumerate, cmd_skew, cmd_verify, to_json};
use sttilt_core::{Error, FieldSpec};

/// Support τ-tilting pairs, group actions and skew group algebras.
#[derive(Parser)]
#[command(name = "sttilt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Abort enumeration after this many pairs.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Field override: Q or Fp:p.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Random seed for the iso-test trials, in hexadecimal.
    #[arg(long, global = true)]
    seed: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Exchange quiver of support τ-tilting pairs, with stable vertices marked.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Skew group algebra, its basic reduction and the characters.
    Skew { file: PathBuf },
    /// Stable-pair correspondence and the property suites.
    Verify { file: PathBuf },
}

fn load(path: &PathBuf, cli: &Cli) -> Result<Problem, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let doc = InputDocument::from_json(&text)?;
    let overrides = Overrides {
        field: cli
            .field
            .as_deref()
            .map(str::parse::<FieldSpec>)
            .transpose()?,
        seed: cli.seed.as_deref().map(parse_seed).transpose()?,
        max_vertices: cli.max_vertices,
    };
    doc.build(&overrides)
}

fn write(path: &PathBuf, text: &str) -> Result<(), Error> {
    std::fs::write(path, text)
        .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Enumerate { file, dot, json } => {
            let out = cmd_enumerate(&load(file, cli)?)?;
            let text = to_json(&out.report);
            match json {
                Some(path) => write(path, &text)?,
                None => print!("{text}"),
            }
            if let Some(path) = dot {
                write(path, &out.dot)?;
            }
            Ok(true)
        }
        Command::Skew { file } => {
            print!("{}", to_json(&cmd_skew(&load(file, cli)?)?));
            Ok(true)
        }
        Command::Verify { file } => {
            let report = cmd_verify(&load(file, cli)?)?;
            print!("{}", to_json(&report));
            for c in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("FAIL {}/{}: {}", c.suite, c.name, c.detail);
            }
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
