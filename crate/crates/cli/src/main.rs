mod args;
mod commands;
mod error;
mod row;
mod table;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Scan(a) => commands::scan(a),
        Command::Table(a) => table::table(a),
        Command::Free(a) => commands::free(a),
        Command::Verify(a) => verify::verify(a),
        Command::Dump(a) => commands::dump(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cha-fisher: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
