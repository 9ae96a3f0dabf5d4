use std::io;
use std::process::ExitCode;

use clap::Parser;
use mdim_core::cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let stdout = io::stdout();
    match run(cli, &mut stdin.lock(), &mut stdout.lock()) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
