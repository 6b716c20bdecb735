use std::process::ExitCode;

use clap::Parser;
use wedge_cli::{run, Cli, Status};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            Status::InputError.into()
        }
    }
}
