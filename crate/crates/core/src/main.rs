use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use amicable::cli::{run, Command, RunConfig};
use amicable::report::Format;
use amicable::Int;

/// Exact-integer search, certification, and lattice realization of amicable
/// and equable parallelograms.
#[derive(Parser)]
#[command(name = "amicable", version, about)]
struct Args {
    #[command(subcommand)]
    command: CommandArg,

    /// Report format written to stdout (or --output)
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Worker threads for the scans; reports are byte-identical for any value
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1024))]
    jobs: u32,

    /// Write the report to this file instead of stdout (UTF-8, LF endings)
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum CommandArg {
    /// Complete solution set of the even-family rhombus equation
    SolveStar,
    /// Complete solution set of the odd-family rhombus equation
    #[command(name = "solve-starstar")]
    SolveStarStar,
    /// Brute-force scan for amicable rhombus pairs with sides up to --bound
    SearchRhombus {
        #[arg(long)]
        bound: i64,
    },
    /// Exhaustive search for equable rectangles and amicable rectangle pairs
    SearchRectangles,
    /// Brute-force scan for amicable parallelogram pairs with sides up to --bound
    SearchParallelograms {
        #[arg(long)]
        bound: i64,
    },
    /// Decide whether sides (x, y) and (a, b) form an amicable pair
    VerifyPair { x: i64, y: i64, a: i64, b: i64 },
    /// Verify a pair and realize both members on the integer lattice
    EmbedPair { x: i64, y: i64, a: i64, b: i64 },
    /// Map an even-family solution (kappa, m, n) onto its Weierstrass curve
    Elliptic { kappa: i64, m: i64, n: i64 },
    /// Diff the solver route against the oracle route up to --bound and
    /// lattice-embed every hit; mismatches exit with code 1
    CrossCheck {
        #[arg(long)]
        bound: i64,
    },
}

fn main() {
    let args = Args::parse();
    let command = match args.command {
        CommandArg::SolveStar => Command::SolveStar,
        CommandArg::SolveStarStar => Command::SolveStarStar,
        CommandArg::SearchRhombus { bound } => Command::SearchRhombus { bound: bound as Int },
        CommandArg::SearchRectangles => Command::SearchRectangles,
        CommandArg::SearchParallelograms { bound } => {
            Command::SearchParallelograms { bound: bound as Int }
        }
        CommandArg::VerifyPair { x, y, a, b } => Command::VerifyPair {
            x: x as Int,
            y: y as Int,
            a: a as Int,
            b: b as Int,
        },
        CommandArg::EmbedPair { x, y, a, b } => Command::EmbedPair {
            x: x as Int,
            y: y as Int,
            a: a as Int,
            b: b as Int,
        },
        CommandArg::Elliptic { kappa, m, n } => Command::Elliptic {
            kappa: kappa as Int,
            m: m as Int,
            n: n as Int,
        },
        CommandArg::CrossCheck { bound } => Command::CrossCheck { bound: bound as Int },
    };
    let config = RunConfig {
        command,
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        },
        jobs: args.jobs as usize,
        output_path: args.output,
    };
    std::process::exit(run(&config));
}
