use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use roughdm::relations::Relation;
use roughdm::roughsets::{Caps, RoughStructure};
use roughdm_cli::dot::{export_dmrs_dot, DotOptions};
use roughdm_cli::{
    analyze, check_property, oracle, AnalyzeOptions, CliError, Property, RelationDocument, Result,
};

/// Rough-set approximations and their Dedekind-MacNeille completion.
#[derive(Parser)]
#[command(name = "roughdm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report; exits with 4 if any cross-check disagrees.
    Analyze {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the Hasse diagram of DM(RS) in Graphviz format.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Universe-size cap for every exponential stage.
        #[arg(long, value_name = "K")]
        max_n: Option<usize>,
        /// Skip DM(RS) and everything built on it.
        #[arg(long, conflicts_with = "dot")]
        no_dmrs: bool,
    },
    /// Exit 0 if the property holds, 1 if not.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long, value_name = "K")]
        max_n: Option<usize>,
    },
    /// Lattice-side values only, for differential testing.
    Oracle {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Nelson,
    Kleene,
    Stone,
    Distributive,
    Spatial,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Nelson => Property::Nelson,
            PropertyArg::Kleene => Property::Kleene,
            PropertyArg::Stone => Property::Stone,
            PropertyArg::Distributive => Property::Distributive,
            PropertyArg::Spatial => Property::Spatial,
        }
    }
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn load(path: &Path) -> Result<Relation> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_err(path, e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| io_err(path, e))?
    };
    RelationDocument::parse(&text)?.to_relation()
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| io_err(path, e))
}

fn caps(max_n: Option<usize>) -> Caps {
    max_n.map(Caps::uniform).unwrap_or_default()
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze {
            file,
            json,
            dot,
            max_n,
            no_dmrs,
        } => {
            let r = load(&file)?;
            let options = AnalyzeOptions { max_n, no_dmrs };
            let report = analyze(&r, options)?;
            let text = report.to_json()?;
            match json {
                Some(p) => write(&p, &text)?,
                None => print!("{text}"),
            }
            if let Some(p) = dot {
                let base = RoughStructure::build(&r, options.caps())?;
                write(
                    &p,
                    &export_dmrs_dot(r.universe(), base.lattice(), DotOptions::default()),
                )?;
            }
            let bad = report.disagreements();
            if bad.is_empty() {
                Ok(0)
            } else {
                eprintln!("cross-checks disagree: {}", bad.join(", "));
                Ok(4)
            }
        }
        Command::Check {
            file,
            property,
            max_n,
        } => {
            let r = load(&file)?;
            let v = check_property(&r, property.into(), caps(max_n))?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(if v.holds { 0 } else { 1 })
        }
        Command::Oracle { file, max_n } => {
            let r = load(&file)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&oracle(&r, caps(max_n))?)?
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
