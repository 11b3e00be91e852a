//! `lb`: letter-braiding invariants from the command line.

mod commands;
mod error;
mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use letterbraid_core::RingSpec;

use crate::commands::Output;
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "lb", version, about = "Letter-braiding invariants of words in free and presented groups")]
struct Cli {
    /// Coefficient ring: z, q or fp:<p>.
    #[arg(long, global = true, default_value = "z")]
    ring: RingSpec,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Args, Debug)]
struct Group {
    /// Generators of a free group, e.g. "x y".
    #[arg(long, conflicts_with = "presentation")]
    gens: Option<String>,

    /// Presentation file with `gens:` and `rel:` lines.
    #[arg(long)]
    presentation: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Truncated Magnus expansion of a word.
    Magnus {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        word: String,
        /// Truncation order: monomials of degree below it are kept.
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Braiding polynomial and number of a tensor on a word of the free group.
    Braid {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        tensor: String,
        #[arg(long)]
        word: String,
    },
    /// Pairing of an invariant with a word or a combination of words.
    Pair {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        tensor: String,
        #[arg(long)]
        word: String,
        /// Truncation order; defaults to the tensor weight plus one.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Basis of all invariants up to a weight.
    Invariants {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value_t = 2, conflicts_with = "order")]
        weight: usize,
        /// Truncation order, the same as weight plus one.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Whether a tensor is an invariant, with a witness if not.
    Check {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        tensor: String,
    },
    /// Depth of a word in the dimension series.
    Depth {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Pull an invariant back along a homomorphism from a free group.
    Pullback {
        #[command(flatten)]
        group: Group,
        /// Generator images, e.g. "s -> x y, t -> y"; the source generators are the names on the left.
        #[arg(long)]
        endo: String,
        #[arg(long)]
        tensor: String,
    },
    /// Johnson level and dual Johnson homomorphism of an endomorphism.
    Johnson {
        #[command(flatten)]
        group: Group,
        /// Generator images, e.g. "x -> x, y -> x y x^-1".
        #[arg(long)]
        endo: String,
        /// Stage k: weight-(k+1) invariants map to weight-1 invariants.
        #[arg(long, default_value_t = 1)]
        stage: usize,
    },
    /// Dimensions of A[G]/I^N for a finite group given by its multiplication table.
    Oracle {
        /// JSON file {"size": n, "mul": [[...]], "gens": {"x": i, ...}}.
        #[arg(long)]
        table: PathBuf,
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// A presentation of the same group to compare invariant counts against.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let ring = cli.ring;
    let group = |g: &Group| input::group(g.gens.as_deref(), g.presentation.as_deref());
    match &cli.command {
        Command::Magnus { group: g, word, order } => commands::magnus(&group(g)?, word, *order, ring),
        Command::Braid { group: g, tensor, word } => commands::braid(&group(g)?, tensor, word, ring),
        Command::Pair { group: g, tensor, word, order } => commands::pair(&group(g)?, tensor, word, *order, ring),
        Command::Invariants { group: g, weight, order } => {
            commands::invariants(&group(g)?, order.unwrap_or(weight + 1), ring)
        }
        Command::Check { group: g, tensor } => commands::check(&group(g)?, tensor, ring),
        Command::Depth { group: g, word, order } => commands::depth(&group(g)?, word, *order, ring),
        Command::Pullback { group: g, endo, tensor } => commands::pullback(&group(g)?, endo, tensor, ring),
        Command::Johnson { group: g, endo, stage } => commands::johnson(&group(g)?, endo, *stage, ring),
        Command::Oracle { table, order, presentation } => {
            let p = presentation.as_deref().map(|path| input::group(None, Some(path))).transpose()?;
            commands::oracle(table, *order, p.as_ref(), ring)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.format == Format::Latex && !matches!(cli.command, Command::Invariants { .. }) {
        eprintln!("error: --format latex is only available for `invariants`");
        return ExitCode::from(2);
    }
    let output = match run(&cli) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            return ExitCode::from(e.exit_code());
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&output.json).expect("serializable")),
        Format::Text => println!("{}", output.text.trim_end()),
        Format::Latex => print!("{}", output.latex.unwrap_or_default()),
    }
    ExitCode::SUCCESS
}
