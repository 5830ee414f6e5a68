mod output;
mod run;
mod sweep;
mod trace;

use clap::{Args, Parser, Subcommand};
use linepursuit::kinematics::scalar::parse_scalar;
use linepursuit::verify::{run_suite, Suite};
use linepursuit::{AlgorithmId, Direction, KnowledgeModel, Scalar, Scenario, Side};
use std::process::ExitCode;

/// Exit status for usage errors and invalid flag combinations.
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "linepursuit",
    version,
    about = "Two-robot pursuit of a moving target on a line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one scenario and print a key=value report.
    Simulate(ScenarioArgs),
    /// Evaluate a grid of adversarial instances and write CSV.
    Sweep(sweep::SweepArgs),
    /// Run the acceptance checks.
    Verify {
        /// Restrict to one group: fk, nd, ns, nk, theory or isolation.
        #[arg(long, value_parser = parse_suite)]
        suite: Option<Suite>,
    },
    /// Sample both robots and the target over time as CSV.
    Trace {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

/// Flags shared by `simulate` and `trace`.
#[derive(Args, Debug, Clone)]
pub struct ScenarioArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: KnowledgeModel,
    #[arg(long, value_parser = parse_direction)]
    pub direction: Option<Direction>,
    #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
    pub d: Option<Scalar>,
    #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
    pub v: Option<Scalar>,
    #[arg(long, value_parser = parse_side, allow_hyphen_values = true)]
    pub side: Option<Side>,
    /// Whole scenario as `d,v,direction,side`; excludes the four flags above.
    #[arg(long, value_parser = parse_scenario, allow_hyphen_values = true,
          conflicts_with_all = ["direction", "d", "v", "side"])]
    pub scenario: Option<Scenario>,
    #[command(flatten)]
    pub strategy: StrategyArgs,
}

/// Optional strategy overrides; defaults come from the model.
#[derive(Args, Debug, Clone, Default)]
pub struct StrategyArgs {
    #[arg(long, value_parser = parse_alg)]
    pub alg: Option<AlgorithmId>,
    #[arg(long = "first-dir", value_parser = parse_side, allow_hyphen_values = true)]
    pub first_dir: Option<Side>,
    /// Zigzag ratio.
    #[arg(long, value_parser = parse_q)]
    pub a: Option<Scalar>,
    /// Cruise speed.
    #[arg(long, value_parser = parse_q)]
    pub u: Option<Scalar>,
    #[arg(long = "max-iterations")]
    pub max_iterations: Option<usize>,
}

fn parse_q(s: &str) -> Result<Scalar, String> {
    parse_scalar(s).map_err(|e| e.to_string())
}

fn parse_side(s: &str) -> Result<Side, String> {
    s.parse().map_err(|e: linepursuit::Error| e.to_string())
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse().map_err(|e: linepursuit::Error| e.to_string())
}

fn parse_model(s: &str) -> Result<KnowledgeModel, String> {
    s.parse().map_err(|e: linepursuit::Error| e.to_string())
}

fn parse_alg(s: &str) -> Result<AlgorithmId, String> {
    s.parse().map_err(|e: linepursuit::Error| e.to_string())
}

fn parse_scenario(s: &str) -> Result<Scenario, String> {
    s.parse().map_err(|e: linepursuit::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: linepursuit::Error| e.to_string())
}

/// A failure carrying the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<linepursuit::Error> for Failure {
    fn from(e: linepursuit::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn verify(suite: Option<Suite>) -> ExitCode {
    let outcomes = run_suite(suite);
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    println!(
        "{} of {} criteria passed",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => run::simulate(&args),
        Command::Sweep(args) => sweep::sweep(&args),
        Command::Verify { suite } => return verify(suite),
        Command::Trace {
            scenario,
            samples,
            out,
        } => trace::trace(&scenario, samples, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("linepursuit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
