use std::fs;
use std::process::ExitCode;

use azumaya_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = report.render();
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(v) => {
            eprintln!("verdict failed: {} (witness: {})", v.check, v.witness);
            ExitCode::from(1)
        }
    }
}
