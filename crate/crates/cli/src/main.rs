//! `salamander`: checks double complexes read from diagram files.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use salamander_core::fuzz::BackendChoice;
use salamander_core::Pos;

use report::Format;

#[derive(Parser)]
#[command(name = "salamander", version, about = "Subquotient chasing and the salamander lemma on finite double complexes")]
struct Cli {
    /// Output style: report lines plus a summary block, or a single JSON object.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Table,
    Vec,
}

impl From<BackendArg> for BackendChoice {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Table => BackendChoice::Table,
            BackendArg::Vec => BackendChoice::Vector,
        }
    }
}

fn parse_pos(s: &str) -> Result<Pos, String> {
    let (r, c) = s.split_once(',').ok_or_else(|| format!("expected ROW,COL, found `{s}`"))?;
    let num = |t: &str| t.trim().parse::<i32>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(r)?, num(c)?))
}

#[derive(Subcommand)]
enum Command {
    /// Check that the diagram is a double complex.
    Validate { file: PathBuf },
    /// List the four homology objects at each position.
    Homology {
        file: PathBuf,
        #[arg(long, value_parser = parse_pos, allow_hyphen_values = true)]
        at: Option<Pos>,
    },
    /// Build and verify the six-term sequence.
    Salamander {
        file: PathBuf,
        #[arg(long, value_parser = parse_pos, allow_hyphen_values = true)]
        at: Option<Pos>,
        /// Use the column version of the sequence.
        #[arg(long)]
        vertical: bool,
    },
    /// Derive exactness of the first row of a 3x3 grid.
    #[command(name = "3x3")]
    ThreeByThree { file: PathBuf },
    /// Run the lattice law suites.
    Axioms {
        #[arg(long, value_enum)]
        backend: Option<BackendArg>,
        /// Random configurations for the vector suite.
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Generate random complexes and verify the sequence everywhere.
    Fuzz {
        #[arg(long, default_value_t = 200)]
        count: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Defaults to alternating between the two backends.
        #[arg(long, value_enum)]
        backend: Option<BackendArg>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Homology { file, at } => commands::homology(&file, at),
        Command::Salamander { file, at, vertical } => commands::salamander(&file, at, vertical),
        Command::ThreeByThree { file } => commands::three_by_three_cmd(&file),
        Command::Axioms { backend, count, seed } => commands::axioms(backend.map(Into::into), seed, count),
        Command::Fuzz { count, seed, backend } => {
            commands::fuzz(backend.map_or(BackendChoice::Mixed, Into::into), seed, count)
        }
    };
    print!("{}", report.render(cli.format));
    report.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_parse() {
        assert_eq!(parse_pos("1,1"), Ok((1, 1)));
        assert_eq!(parse_pos("-1, 2"), Ok((-1, 2)));
        assert!(parse_pos("1").is_err());
        assert!(parse_pos("a,1").is_err());
    }
}
