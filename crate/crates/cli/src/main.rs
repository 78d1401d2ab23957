//! `exciton`: spectra of level-n exciton matrices as graph invariants.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exciton::{Flavor, Format};

#[derive(Parser)]
#[command(
    name = "exciton",
    version,
    about = "Level-n exciton spectra as graph invariants"
)]
struct Cli {
    /// Omit the timestamp so identical runs produce identical output.
    #[arg(long, global = true)]
    reproducible: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Hex,
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Hex => Format::Hex,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Adjacency,
    Laplacian,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Adjacency => Flavor::Adjacency,
            FlavorArg::Laplacian => Flavor::Laplacian,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleMode {
    Block,
    Isomorphism,
}

#[derive(Args, Clone, Debug)]
struct InputArgs {
    /// Input format; inferred from the extension when omitted
    /// (.hex, .g6/.graph6, anything else is an edge list).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Vertex count, required for hex input.
    #[arg(long)]
    vertices: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of one level matrix.
    Spectrum {
        input: PathBuf,
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long, value_enum, default_value = "adjacency")]
        flavor: FlavorArg,
        /// Grouping tolerance; defaults to 1e-8 times the largest row sum.
        #[arg(long)]
        tol: Option<f64>,
        /// Also compute the exact characteristic polynomial.
        #[arg(long)]
        exact: bool,
        /// Allow levels above N/2.
        #[arg(long)]
        force: bool,
    },
    /// Compare two graphs level by level until a spectrum differs.
    Distinguish {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        io: InputArgs,
        /// Highest level to check (default N/2).
        #[arg(long)]
        max_level: Option<usize>,
        #[arg(long, value_enum, default_value = "adjacency")]
        flavor: FlavorArg,
        #[arg(long)]
        tol: Option<f64>,
        /// Go straight to the spectra without edge-count and degree checks.
        #[arg(long)]
        skip_screens: bool,
        /// Keep going after the first difference.
        #[arg(long)]
        all_levels: bool,
        #[arg(long)]
        force: bool,
    },
    /// Convert between formats, or export a level matrix as a graph.
    Convert {
        input: PathBuf,
        #[command(flatten)]
        io: InputArgs,
        /// Output format.
        #[arg(long, value_enum)]
        to: FormatArg,
        /// Export the level-n adjacency matrix instead of the graph itself.
        #[arg(long)]
        level: Option<usize>,
        /// Write here instead of stdout; a JSON summary goes to stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Bucket a catalog (a directory, or one graph per line) by invariants.
    Batch {
        catalog: PathBuf,
        #[command(flatten)]
        io: InputArgs,
        #[arg(long)]
        max_level: Option<usize>,
        #[arg(long, value_enum, default_value = "adjacency")]
        flavor: FlavorArg,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Cross-check the invariant machinery against independent oracles.
    OracleCheck {
        input: PathBuf,
        /// Second graph, for isomorphism mode.
        second: Option<PathBuf>,
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, value_enum, default_value = "block")]
        mode: OracleMode,
        /// Level for block mode; highest level for isomorphism mode.
        #[arg(long)]
        level: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = output::Context {
        reproducible: cli.reproducible,
    };
    let result = match cli.command {
        Command::Spectrum {
            input,
            io,
            level,
            flavor,
            tol,
            exact,
            force,
        } => commands::spectrum(
            &ctx,
            &input,
            &io.into(),
            level,
            flavor.into(),
            tol,
            exact,
            force,
        ),
        Command::Distinguish {
            first,
            second,
            io,
            max_level,
            flavor,
            tol,
            skip_screens,
            all_levels,
            force,
        } => {
            let opts = exciton::distinguish::DistinguishOptions {
                max_level,
                flavor: flavor.into(),
                tol,
                skip_screens,
                all_levels,
                force,
            };
            commands::distinguish(&ctx, &first, &second, &io.into(), &opts)
        }
        Command::Convert {
            input,
            io,
            to,
            level,
            output,
        } => commands::convert(
            &ctx,
            &input,
            &io.into(),
            to.into(),
            level,
            output.as_deref(),
        ),
        Command::Batch {
            catalog,
            io,
            max_level,
            flavor,
            tol,
        } => {
            let opts = exciton::catalog::CatalogOptions {
                max_level,
                flavor: flavor.into(),
                tol,
            };
            commands::batch(&ctx, &catalog, &io.into(), &opts)
        }
        Command::OracleCheck {
            input,
            second,
            io,
            mode,
            level,
        } => match mode {
            OracleMode::Block => commands::oracle_block(&ctx, &input, &io.into(), level),
            OracleMode::Isomorphism => {
                commands::oracle_isomorphism(&ctx, &input, second.as_deref(), &io.into(), level)
            }
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

impl From<InputArgs> for input::InputSpec {
    fn from(a: InputArgs) -> Self {
        input::InputSpec {
            format: a.format.map(Into::into),
            vertices: a.vertices,
        }
    }
}
