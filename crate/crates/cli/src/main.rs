use std::process::ExitCode;

use bellsym::error::Error;
use bellsym::exec::Execution;
use bellsym::symfunc::Basis;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "bellsym", version, about = "Exact higher-order Bell symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    config: RunConfig,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Largest number of objects an enumeration may visit.
    #[arg(long, global = true, env = "BELLSYM_BUDGET", default_value_t = bellsym::species::DEFAULT_OBJECT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

impl RunConfig {
    pub fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisArg {
    Monomial,
    Homogeneous,
    Powersum,
    Schur,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Monomial => Basis::Monomial,
            BasisArg::Homogeneous => Basis::Homogeneous,
            BasisArg::Powersum => Basis::PowerSum,
            BasisArg::Schur => Basis::Schur,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print B_0 .. B_N of order m.
    Bell {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Homogeneous)]
        basis: BasisArg,
        /// tower, plethystic-recursion, monomial-recursion, powersum-recursion, convolution or all.
        #[arg(long, default_value = "tower")]
        route: String,
    },
    /// Run the cross-route verification matrix.
    Verify {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Restriction series of one shape, or of every shape of a degree.
    Restriction {
        /// Partition such as "3,1,1"; the empty string is the empty partition.
        #[arg(long, conflicts_with = "degree", required_unless_present = "degree")]
        lambda: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
        /// Last index of the coefficient stream and of the Cesàro trace.
        #[arg(long, default_value_t = 20)]
        horizon: usize,
    },
    /// Print H_1 .. H_N.
    Hfun {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Monomial)]
        basis: BasisArg,
    },
    /// Print b_0^(m) .. b_nmax^(m).
    Bellnum {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Compare Schur coefficients along dominance-comparable pairs (observation only).
    DominanceReport {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: usize,
    },
    /// List every order-m hyper-partition of {1..n}.
    SpeciesDump {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: usize,
    },
}

/// Process exit status for each outcome.
pub enum Outcome {
    Success,
    VerificationFailed,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Parse(_) | Error::InvalidArgument(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = &cli.config;
    let result = match cli.command {
        Command::Bell {
            order,
            degree,
            basis,
            route,
        } => commands::bell(cfg, order, degree, basis.into(), &route),
        Command::Verify { order, degree } => commands::verify(cfg, order, degree),
        Command::Restriction {
            lambda,
            degree,
            horizon,
        } => commands::restriction(cfg, lambda.as_deref(), degree, horizon),
        Command::Hfun { degree, basis } => commands::hfun(cfg, degree, basis.into()),
        Command::Bellnum { order, nmax } => commands::bellnum(cfg, order, nmax),
        Command::DominanceReport { order, degree } => commands::dominance_report(cfg, order, degree),
        Command::SpeciesDump { order, degree } => commands::species_dump(cfg, order, degree),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
