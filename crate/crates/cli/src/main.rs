mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sigmaforge::ideal::CHECK_NAMES;
use sigmaforge::matmodel::Family;

/// Exact computation in the free ring modulo the ideal that makes the
/// noncommutative elementary polynomials central.
#[derive(Debug, Parser)]
#[command(name = "sigmaforge", version)]
pub struct RunConfig {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "SIGMAFORGE_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gens {
    Comm,
    Diff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Commuting,
    ConjCyclic,
    BlockUpper,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Commuting => Family::Commuting,
            FamilyArg::ConjCyclic => Family::ConjCyclic,
            FamilyArg::BlockUpper => Family::BlockUpper,
        }
    }
}

#[derive(Debug, Args)]
pub struct Arity {
    /// Number of variables; inferred from the input when omitted (at least 3).
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the elementary polynomial sigma_k in n variables.
    Sigma { n: usize, k: usize },
    /// Print the orbit polynomial of a monomial.
    Orbit {
        monomial: String,
        #[command(flatten)]
        arity: Arity,
    },
    /// Factor a monomial beginning with x1 into atoms.
    Factor {
        monomial: String,
        #[command(flatten)]
        arity: Arity,
    },
    /// List the atoms of degree d in n variables.
    Atoms { n: usize, d: u32 },
    /// Rewrite an invariant polynomial in orbit polynomials of atoms.
    Rewrite {
        poly: String,
        #[command(flatten)]
        arity: Arity,
    },
    /// Decide ideal membership.
    Member {
        poly: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "comm")]
        gens: Gens,
        /// Also print an explicit combination of generators.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Run a named verification.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CHECK_NAMES))]
        check: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// The three-variable quotient.
    N3 {
        #[command(subcommand)]
        action: N3Action,
    },
    /// Search structured matrix tuples for vanishing products of commutators.
    Search {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, value_enum, default_value = "conj-cyclic")]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum N3Action {
    /// Reduce an invariant to the form z0 + z1*c + z2*c^2.
    Reduce {
        poly: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Run the three-variable verification suite.
    Verify {
        #[arg(long)]
        max_degree: Option<u32>,
    },
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    if let Some(jobs) = config.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    match commands::run(&config) {
        Ok(commands::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Fail) => ExitCode::from(1),
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
