use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    rwg::cli::run(rwg::cli::Cli::parse())
}
