//! Command-line front end: graph in, spectral certificates and exact checks out.
//!
//! Each `cmd_*` function returns a [`Report`] plus an exit status; `main` only prints.
//! Exit codes: 0 success, 1 soundness violation, 2 input error, 3 numeric failure.

pub mod args;
pub mod commands;
pub mod error;
pub mod report;

pub use args::{Cli, Command};
pub use commands::{cmd_altpoly, cmd_certify, cmd_spectrum, cmd_verify, Outcome};
pub use error::CliError;
pub use report::{render_text, Report};

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Altpoly(a) => cmd_altpoly(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Verify(a) => cmd_verify(a),
    }
}
