use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ritt_core::chains::{ChainContext, Hypothesis};
use ritt_core::field::Field;
use ritt_core::fixtures::{self, FixtureKind};
use ritt_core::formats::{parse_context, parse_pair_file, parse_poly_file, parse_skew_file};
use ritt_core::laurent::default_precision;
use ritt_core::polyfield::Poly;
use ritt_core::report::RunReport;
use ritt_core::suite::{self, GroupCheck};
use ritt_core::{Error, Result};

/// Exact verification of the decomposition and subgroup-chain dictionary.
///
/// Input arguments are file paths, or `@name` for a built-in fixture
/// (`fixtures list` shows them).
#[derive(Parser)]
#[command(name = "ritt-lab", version)]
struct Cli {
    /// Print only the JSON-lines block.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subgroup chains of a context file.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Decompositions of a polynomial file.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Skew (additive) polynomial factorizations.
    #[command(subcommand)]
    Additive(AdditiveCommand),
    /// Laurent branches at infinity and their inertia cycle.
    LaurentBranch {
        #[arg(long)]
        field: String,
        /// Sparse terms `<deg>:<coeff> ...`.
        #[arg(long)]
        poly: String,
        /// Defaults to twice the degree.
        #[arg(long)]
        precision: Option<usize>,
    },
    /// Automorphism orders of X^3 + X^-3 = (X^3 - 3X) ∘ (X + 1/X) over F_p.
    Counterexample {
        #[arg(long, required_unless_present = "pair")]
        prime: Option<u64>,
        /// A rational pair file to scan instead.
        #[arg(long, conflicts_with = "prime")]
        pair: Option<String>,
    },
    /// The built-in fixture catalog.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Args)]
struct HypothesisArg {
    /// Accept a transitive A that is neither quasi-Hamiltonian nor Dedekind
    /// and report whatever the exchange walk finds.
    #[arg(long)]
    weak_hypothesis: bool,
}

impl HypothesisArg {
    fn get(&self) -> Hypothesis {
        if self.weak_hypothesis {
            Hypothesis::Weak
        } else {
            Hypothesis::QuasiHamiltonian
        }
    }
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Run theorem verifiers on a context.
    Verify {
        file: String,
        /// Comma-separated subset of ritt1,mon,aut,div,indec,rho,cores.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        #[command(flatten)]
        hypothesis: HypothesisArg,
    },
    /// List maximal chains with their invariants.
    Chains {
        file: String,
        /// Exchange walk between two chains, numbered as listed.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        walk: Option<Vec<usize>>,
        #[command(flatten)]
        hypothesis: HypothesisArg,
    },
}

#[derive(Subcommand)]
enum PolyCommand {
    /// All complete decompositions in canonical form.
    Decompose { file: String },
    /// Aut(f), Γ, the factorable core and factorability.
    Invariants { file: String },
}

#[derive(Subcommand)]
enum AdditiveCommand {
    /// All complete factorizations and the Ore invariance check.
    Factor { file: String },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// Run every verifier over the whole catalog.
    RunAll,
    /// Names of the built-in fixtures.
    List,
}

fn read_input(arg: &str, kind: FixtureKind) -> Result<(String, String)> {
    if let Some(name) = arg.strip_prefix('@') {
        return match fixtures::find(name) {
            Some(f) if f.kind == kind => Ok((f.name.to_string(), f.text.to_string())),
            _ => Err(Error::InvalidInput(format!("no {kind:?} fixture named {name:?}").to_lowercase())),
        };
    }
    let text = fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!("{arg}: {e}")))?;
    let stem = std::path::Path::new(arg)
        .file_stem()
        .map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((stem, text))
}

fn load_context(arg: &str) -> Result<ChainContext> {
    let (name, text) = read_input(arg, FixtureKind::Context)?;
    parse_context(&name, &text).map_err(|e| in_file(arg, e))
}

fn load_poly(arg: &str) -> Result<(String, Poly)> {
    let (name, text) = read_input(arg, FixtureKind::Poly)?;
    Ok((name, parse_poly_file(&text).map_err(|e| in_file(arg, e))?))
}

fn in_file(arg: &str, e: Error) -> Error {
    Error::InvalidInput(format!("{arg}: {e}"))
}

fn parse_checks(names: &[String]) -> Result<Vec<GroupCheck>> {
    names.iter().map(|n| n.trim().parse()).collect()
}

fn run(command: &Command, echo: String) -> Result<RunReport> {
    let mut report = RunReport::new(echo);
    match command {
        Command::Group(GroupCommand::Verify { file, theorems, hypothesis }) => {
            let checks = match theorems {
                Some(names) => parse_checks(names)?,
                None => GroupCheck::DEFAULT.to_vec(),
            };
            let ctx = load_context(file)?;
            report.extend(suite::group_records(&ctx, &checks, hypothesis.get()));
        }
        Command::Group(GroupCommand::Chains { file, walk, hypothesis }) => {
            let ctx = load_context(file)?;
            report.extend(suite::chain_records(&ctx));
            if let Some(w) = walk {
                report.push(suite::walk_record(&ctx, w[0], w[1], hypothesis.get()));
            }
        }
        Command::Poly(PolyCommand::Decompose { file }) => {
            let (name, f) = load_poly(file)?;
            report.extend(suite::decomposition_records(&name, &f));
        }
        Command::Poly(PolyCommand::Invariants { file }) => {
            let (name, f) = load_poly(file)?;
            report.extend(suite::poly_records(&name, &f));
        }
        Command::Additive(AdditiveCommand::Factor { file }) => {
            let (name, text) = read_input(file, FixtureKind::Skew)?;
            let f = parse_skew_file(&text).map_err(|e| in_file(file, e))?;
            report.extend(suite::skew_records(&name, &f));
        }
        Command::LaurentBranch { field, poly, precision } => {
            let field = Field::parse(field)?;
            let f = Poly::parse_terms(&field, poly)?;
            let m = precision.unwrap_or_else(|| default_precision(&f));
            report.extend(suite::laurent_records(&format!("{f} over {field}"), &f, m));
        }
        Command::Counterexample { prime: Some(p), .. } => {
            ritt_core::ratfunc::cubic_reciprocal_example(*p)?;
            report.push(suite::counterexample_record(*p));
        }
        Command::Counterexample { pair, .. } => {
            let file = pair.as_deref().unwrap_or_default();
            let (name, text) = read_input(file, FixtureKind::Pair)?;
            let (f2, f1) = parse_pair_file(&text).map_err(|e| in_file(file, e))?;
            report.push(suite::pair_record(&name, &f2, &f1));
        }
        Command::Fixtures(FixturesCommand::RunAll) => {
            report = suite::run_all();
        }
        Command::Fixtures(FixturesCommand::List) => {
            for f in fixtures::CATALOG {
                let kind = format!("{:?}", f.kind).to_lowercase();
                report.push(ritt_core::report::Record::pass(
                    f.name,
                    "fixture",
                    serde_json::json!({ "kind": kind }),
                    format!("@{}", f.name),
                ));
            }
        }
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli.command, format!("ritt-lab {echo}")) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cli.json).as_bytes());
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
