use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use condiam_cli::{render_text, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", outcome.report.to_json());
            } else {
                print!("{}", render_text(&outcome.report));
            }
            eprintln!(
                "{} finished in {:.3} s",
                outcome.report.command,
                start.elapsed().as_secs_f64()
            );
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
