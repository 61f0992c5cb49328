//! `hgcount`: closed-form and brute-force counts of Hopf–Galois structures
//! between groups `M(k,l) = D_2k × C_l` of order `2N`.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hgcount::Error;

use args::{Cli, Command};
use output::Report;

/// Exit codes.
const USAGE: u8 = 1;
const INAPPLICABLE: u8 = 2;
const GUARD: u8 = 3;
const MISMATCH: u8 = 4;

/// A failure mapped to its exit code.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) => INAPPLICABLE,
            Error::SizeGuard { .. } => GUARD,
            _ => USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let config = cli.config();
    match &cli.command {
        Command::Count { gamma, r#type, n } => commands::count(gamma, r#type, *n),
        Command::Table { n } => commands::table(*n),
        Command::Oracle { g, n, dump } => commands::oracle(&config, g.as_ref(), *n, *dump),
        Command::Verify { n } => commands::verify(&config, *n),
        Command::Braces { gamma, n } => commands::braces(&config, gamma, *n),
        Command::Orders { g, n } => commands::orders(&config, g, *n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.parallelism > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.parallelism)
            .build_global()
        {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(USAGE);
        }
    }
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.mismatch {
                ExitCode::from(MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
