use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfcolor::geometry::{ehrhart_qsym, hilbert_function};
use hopfcolor::harness::{run_axiom_suite, run_theorem_suite, GenConfig, SuiteReport, MAX_SUITE_GROUND};
use hopfcolor::invariants::{chromatic_polynomial, chromatic_qsym, enumerate_stable_flags};
use hopfcolor::io::{parse_raw_problem, parse_structure_with, render_structure};
use hopfcolor::problem::validate;
use hopfcolor::{ClosureCheck, ColoringProblem, Error, HopfMonoid, HopfStructure, SpeciesTag};

/// Largest ground set accepted for a single structure.
const MAX_GROUND: usize = 8;

#[derive(Parser)]
#[command(name = "hopfcolor", version, about = "Chromatic invariants of coloring problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a structure to its coloring problem.
    Convert {
        input: PathBuf,
        #[arg(long, default_value = "coloring-problem")]
        to: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Chromatic polynomial (default), quasisymmetric function, or a value.
    Chromatic {
        input: PathBuf,
        #[arg(long, group = "what")]
        poly: bool,
        #[arg(long, group = "what")]
        qsym: bool,
        #[arg(long, group = "what", value_name = "K")]
        eval: Option<i64>,
    },
    /// Hilbert function of the relative Stanley-Reisner module in degree N.
    Hilbert {
        input: PathBuf,
        #[arg(long)]
        n: u32,
    },
    /// Ehrhart quasisymmetric function.
    Ehrhart { input: PathBuf },
    /// Validate a structure.
    Check {
        input: PathBuf,
        /// Check order-ideal closure exhaustively instead of through covers.
        #[arg(long)]
        paranoid: bool,
    },
    /// List the stable flags with their types.
    Flags { input: PathBuf },
    /// Run the Hopf monoid law suite on random structures.
    Axioms {
        #[arg(long)]
        species: SpeciesTag,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        size: usize,
    },
    /// Run the cross-module identities on random instances.
    Theorems {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        size: usize,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::UnknownLabel(_) => 2,
        Error::Guard(_) => 3,
        _ => 1,
    }
}

fn load(path: &Path, mode: ClosureCheck) -> Result<HopfStructure, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let x = parse_structure_with(&text, mode)?;
    if x.ground().len() > MAX_GROUND {
        return Err(Error::Guard(format!(
            "{} has {} elements, at most {MAX_GROUND} are accepted",
            path.display(),
            x.ground().len()
        )));
    }
    Ok(x)
}

fn load_problem(path: &Path) -> Result<ColoringProblem, Error> {
    Ok(load(path, ClosureCheck::Covers)?.phi())
}

fn suite_config(seed: u64, size: usize) -> Result<GenConfig, Error> {
    if size > MAX_SUITE_GROUND {
        return Err(Error::Guard(format!(
            "suites run on at most {MAX_SUITE_GROUND} elements, got {size}"
        )));
    }
    Ok(GenConfig::new(seed, size))
}

fn report(r: SuiteReport) -> Result<String, Error> {
    for (law, witness) in &r.failures {
        eprintln!("{law}: {witness}");
    }
    if r.passed() {
        return Ok(r.summary());
    }
    println!("{}", r.summary());
    Err(Error::InvalidStructure {
        kind: "suite",
        reason: format!("{} law failures", r.failures.len()),
    })
}

fn run(cmd: Command) -> Result<String, Error> {
    match cmd {
        Command::Convert { input, to, output } => {
            if to.parse::<SpeciesTag>()? != SpeciesTag::ColoringProblem {
                return Err(Error::Parse(format!("can only convert to coloring-problem, not {to}")));
            }
            let c = load_problem(&input)?;
            let text = render_structure(&HopfStructure::ColoringProblem(c));
            match output {
                Some(path) => {
                    std::fs::write(&path, format!("{text}\n"))
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    Ok(format!("wrote {}", path.display()))
                }
                None => Ok(text),
            }
        }
        Command::Chromatic { input, qsym, eval, .. } => {
            let c = load_problem(&input)?;
            if qsym {
                return Ok(chromatic_qsym(&c).to_string());
            }
            let poly = chromatic_polynomial(&c)?;
            Ok(match eval {
                Some(k) => poly.eval_int(k).to_string(),
                None => poly.to_string(),
            })
        }
        Command::Hilbert { input, n } => Ok(hilbert_function(&load_problem(&input)?, n)?.to_string()),
        Command::Ehrhart { input } => Ok(ehrhart_qsym(&load_problem(&input)?).to_string()),
        Command::Check { input, paranoid } => {
            let mode = if paranoid { ClosureCheck::Paranoid } else { ClosureCheck::Covers };
            let text = std::fs::read_to_string(&input)
                .map_err(|e| Error::Parse(format!("{}: {e}", input.display())))?;
            // Coloring problems are validated in full so every violation is listed.
            if let Ok(raw) = parse_raw_problem(&text) {
                let violations = validate(&raw, mode);
                if !violations.is_empty() {
                    return Err(Error::InvalidProblem(violations));
                }
            }
            let x = load(&input, mode)?;
            Ok(format!("valid {} on {} elements", x.tag(), x.ground().len()))
        }
        Command::Flags { input } => {
            let c = load_problem(&input)?;
            let g = c.ground();
            let lines: Vec<String> = enumerate_stable_flags(&c)
                .map(|f| {
                    let chain: Vec<String> = f.chain().iter().map(|&s| g.show(s)).collect();
                    format!("{}  {}", f.composition(), chain.join(" < "))
                })
                .collect();
            Ok(lines.join("\n"))
        }
        Command::Axioms { species, trials, seed, size } => {
            report(run_axiom_suite(species, trials, &suite_config(seed, size)?)?)
        }
        Command::Theorems { trials, seed, size } => report(run_theorem_suite(trials, &suite_config(seed, size)?)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
