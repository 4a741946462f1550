use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use quasiprolong::{
    are_isotopic, brualdi_scan, find_complete_mappings, find_quasicomplete_mappings, parse_square, prolong_any,
    Error, LatinSquare, Permutation, ProlongationSpec,
};

#[derive(Parser)]
#[command(name = "quasiprolong", version, about = "Prolongations of finite quasigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a Latin square.
    Validate { file: PathBuf },
    /// List complete and/or quasicomplete mappings.
    Mappings {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::All)]
        kind: Kind,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Prolong a square with one of the three constructions.
    Prolong {
        file: PathBuf,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Mapping as comma-separated images; defaults to the first eligible one.
        #[arg(long)]
        sigma: Option<Permutation>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        x1: Option<usize>,
    },
    /// Prolong via a maximum partial transversal.
    ProlongAny { file: PathBuf },
    /// Decide isotopy of two squares of order at most 8.
    Isotopy { first: PathBuf, second: PathBuf },
    /// Scan all reduced squares of an order for short maximum transversals.
    Brualdi {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print a group table.
    #[command(group(ArgGroup::new("table").required(true).args(["cyclic", "klein"])))]
    Gen {
        #[arg(long)]
        cyclic: Option<usize>,
        #[arg(long)]
        klein: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Complete,
    Quasicomplete,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Classical,
    Belyavskaya,
    Dd,
}

/// Outcome of a command: success, a negative verdict, or bad input.
enum Outcome {
    Yes,
    No,
}

/// Reads a file, or stdin for `-`.
fn read_text(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn read_square(path: &Path) -> Result<LatinSquare, String> {
    parse_square(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<Outcome, String> {
    match cli.command {
        Command::Validate { file } => {
            match parse_square(&read_text(&file)?) {
                Ok(sq) => {
                    println!("valid (order {})", sq.order());
                    Ok(Outcome::Yes)
                }
                Err(Error::NotLatin(v)) => {
                    println!("invalid: {v}");
                    Ok(Outcome::No)
                }
                Err(e) => Err(format!("{}: {e}", file.display())),
            }
        }
        Command::Mappings { file, kind, limit } => {
            let sq = read_square(&file)?;
            let mut any = false;
            if matches!(kind, Kind::Complete | Kind::All) {
                for p in find_complete_mappings(&sq, limit) {
                    any = true;
                    match kind {
                        Kind::All => println!("complete {p}"),
                        _ => println!("{p}"),
                    }
                }
            }
            if matches!(kind, Kind::Quasicomplete | Kind::All) {
                for p in find_quasicomplete_mappings(&sq, limit) {
                    any = true;
                    match kind {
                        Kind::All => println!("quasicomplete {p}"),
                        _ => println!("{p}"),
                    }
                }
            }
            Ok(if any { Outcome::Yes } else { Outcome::No })
        }
        Command::Prolong { file, method, sigma, a, x1 } => {
            let sq = read_square(&file)?;
            let sigma = match sigma {
                Some(s) => s,
                None => {
                    let found = match method {
                        MethodArg::Dd => find_quasicomplete_mappings(&sq, Some(1)),
                        _ => find_complete_mappings(&sq, Some(1)),
                    };
                    match found.into_iter().next() {
                        Some(s) => s,
                        None => {
                            eprintln!("no eligible mapping");
                            return Ok(Outcome::No);
                        }
                    }
                }
            };
            let spec = match method {
                MethodArg::Classical => ProlongationSpec::classical(sigma),
                MethodArg::Belyavskaya => {
                    ProlongationSpec::belyavskaya(sigma, a.ok_or("--a is required for belyavskaya")?)
                }
                MethodArg::Dd => ProlongationSpec::deriyenko_dudek(sigma, x1.ok_or("--x1 is required for dd")?),
            };
            match spec.apply(&sq) {
                Ok(p) => {
                    print!("{}", p.to_text());
                    Ok(Outcome::Yes)
                }
                Err(e @ (Error::NotComplete { .. } | Error::NotQuasicomplete { .. })) => {
                    eprintln!("{e}");
                    Ok(Outcome::No)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::ProlongAny { file } => {
            let sq = read_square(&file)?;
            match prolong_any(&sq) {
                Ok(p) => {
                    print!("{}", p.to_text());
                    Ok(Outcome::Yes)
                }
                Err(e @ Error::BrualdiCounterexample { .. }) => {
                    eprintln!("{e}");
                    Ok(Outcome::No)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Isotopy { first, second } => {
            let l = read_square(&first)?;
            let m = read_square(&second)?;
            match are_isotopic(&l, &m).map_err(|e| e.to_string())? {
                Some(w) => {
                    println!("isotopic\n{}\n{}\n{}", w.alpha, w.beta, w.gamma);
                    Ok(Outcome::Yes)
                }
                None => {
                    println!("not-isotopic");
                    Ok(Outcome::No)
                }
            }
        }
        Command::Brualdi { order, threads } => {
            if threads == Some(0) {
                return Err("--threads must be positive".into());
            }
            let report = brualdi_scan(order, threads).map_err(|e| e.to_string())?;
            println!("order {}", report.order);
            println!("squares_scanned {}", report.squares_scanned);
            println!("min_max_transversal {}", report.min_max_transversal);
            println!("witnesses {}", report.witnesses.len());
            for (sq, len) in &report.witnesses {
                println!("# maximum partial transversal {len}");
                print!("{sq}");
            }
            Ok(if report.witnesses.is_empty() { Outcome::Yes } else { Outcome::No })
        }
        Command::Gen { cyclic, klein } => {
            let sq = match (cyclic, klein) {
                (Some(n), false) => LatinSquare::cyclic(n).map_err(|e| e.to_string())?,
                _ => LatinSquare::klein(),
            };
            print!("{sq}");
            Ok(Outcome::Yes)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
