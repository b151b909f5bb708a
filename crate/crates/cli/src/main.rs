use std::process::ExitCode;

use clap::Parser;
use faircut_cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let (Some(path), Some(content)) = (&cli.global.output, &outcome.file) {
                if let Err(e) = std::fs::write(path, content) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(exit::PARSE as u8);
                }
            }
            print!("{}", outcome.text);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
