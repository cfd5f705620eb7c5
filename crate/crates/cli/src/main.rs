mod args;
mod commands;
mod render;

use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hopf_core::report::Verdict;

use crate::args::{Cli, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}\n{1}")]
    Input(String, &'static str),
    #[error("cannot access {0}: {1}")]
    Io(String, std::io::Error),
    #[error(transparent)]
    Core(#[from] hopf_core::Error),
}

fn execute(cli: &Cli) -> Result<Verdict, CliError> {
    if let Some(threads) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let outcome = commands::run(&cli.command)?;
    let json = outcome.to_json();
    let text = match cli.global.format {
        Format::Json => serde_json::to_string_pretty(&json).expect("valid JSON") + "\n",
        Format::Text => render::render_text(&json),
    };
    match &cli.global.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))?,
        None => print!("{text}"),
    }
    Ok(outcome.verdict)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    match execute(&cli) {
        Ok(Verdict::Fail) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
