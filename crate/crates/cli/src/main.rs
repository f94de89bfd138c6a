//! `thd`: twisted Hodge diamonds, Hochschild dimensions, pushforward kernels
//! and A-infinity deformation checks from the command line.

mod ainfty_cmds;
mod error;
mod hodge_cmds;
mod report;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twisted_hodge::{Target, DEFAULT_BUDGET};

use error::CliError;
use hodge_cmds::{parse_range, Expectation};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "thd", version, about = "Exact twisted Hodge numbers, Hochschild dimensions and A-infinity checks")]
struct Cli {
    /// Output format; every number is written as a decimal string in JSON and CSV.
    #[arg(long, value_enum, global = true, default_value = "pretty")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

/// A smooth hypersurface of dimension n and degree d in P^{n+1}.
#[derive(Args, Debug)]
struct HypersurfaceArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    n: i64,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    d: i64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    OnX,
    Pushforward,
    Kernel,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::OnX => Target::OnX,
            TargetArg::Pushforward => Target::Pushforward,
            TargetArg::Kernel => Target::Kernel,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The twisted Hodge diamond h^{i,j}(X, O_X(twist)).
    Diamond {
        #[command(flatten)]
        x: HypersurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
    },
    /// dim HH^m for m in [0, 2n+1] for one target.
    Hh {
        #[command(flatten)]
        x: HypersurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, value_enum, default_value = "on-x")]
        target: TargetArg,
    },
    /// dim HH^m(P^{n+1}, f_* O_X(p)), cross-checked through HH(X) when t - p is outside {0, d}.
    Pushforward {
        #[command(flatten)]
        x: HypersurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
    /// dim ker f_* on HH^m(X, O_X(p)), for one m or for every m in [0, 2n].
    Kernel {
        #[command(flatten)]
        x: HypersurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// Recompute the kernels by rank propagation along the long exact sequence.
        #[arg(long)]
        verify_les: bool,
        /// Compare against an expected value M:VALUE; mismatches are flagged, not fatal.
        #[arg(long, value_name = "M:VALUE")]
        expect: Vec<Expectation>,
    },
    /// Kernel dimension in degree n + 3 over a grid; ranges are A..B (inclusive) or A.
    Search {
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        n: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        d: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        p: RangeInclusive<i64>,
    },
    /// Kernel dimension in degree n + 3 for n = 2k - 1 and p = -kd - d.
    Quadric {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        k: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        d: i64,
    },
    /// Hochschild complexes and A-infinity deformations of finite categories.
    Ainfty {
        #[command(subcommand)]
        command: AinftyCommand,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// A bundled example: ground-field, dual-numbers, dual-numbers-deformed,
    /// dual-numbers-perturbed, a2, a2-split, a2-deformed, split-pair, matrix-algebra.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    example: Option<String>,
    /// A category in the plain-text format.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Cap on evaluations or matrix entries.
    #[arg(long, env = "THD_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum AinftyCommand {
    /// Check the A-infinity identities, after deforming by the input cochain if any.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Largest arity checked; defaults to max(7, n + 2) for top product m_n.
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// dim HH^n of the category with its coefficients for n = 0..=degree.
    Hhdim {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Deform by the input cocycle, or by a seeded random cocycle, and verify.
    Deform {
        #[command(flatten)]
        source: Source,
        /// Degree of the random cocycle when the input has no cochain.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
        degree: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        k_max: Option<usize>,
        /// Write the category and the cochain used in the plain-text format.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Diamond { x, twist } => hodge_cmds::cmd_diamond(x.n, x.d, twist),
        Command::Hh { x, p, target } => hodge_cmds::cmd_hh(x.n, x.d, p, target.into()),
        Command::Pushforward { x, p } => hodge_cmds::cmd_pushforward(x.n, x.d, p),
        Command::Kernel { x, p, m, verify_les, expect } => {
            hodge_cmds::cmd_kernel(x.n, x.d, p, m, verify_les, &expect)
        }
        Command::Search { n, d, p } => hodge_cmds::cmd_search(n, d, p),
        Command::Quadric { k, d } => hodge_cmds::cmd_quadric(k, d),
        Command::Ainfty { command } => match command {
            AinftyCommand::Verify { source, k_max } => {
                let input = ainfty_cmds::load(source.example.as_deref(), source.input.as_deref())?;
                ainfty_cmds::cmd_verify(&input, k_max, source.budget)
            }
            AinftyCommand::Hhdim { source, degree } => {
                let input = ainfty_cmds::load(source.example.as_deref(), source.input.as_deref())?;
                ainfty_cmds::cmd_hhdim(&input, degree, source.budget)
            }
            AinftyCommand::Deform { source, degree, seed, k_max, emit } => {
                let input = ainfty_cmds::load(source.example.as_deref(), source.input.as_deref())?;
                ainfty_cmds::cmd_deform(&input, degree as usize, seed, k_max, source.budget, emit.as_deref())
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render(cli.format).as_bytes()).is_err() {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("thd: {e}");
            e.exit_code()
        }
    }
}
