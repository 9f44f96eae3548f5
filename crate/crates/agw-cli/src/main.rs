use std::process::ExitCode;

use clap::Parser;

mod cli;
mod run;

fn main() -> ExitCode {
    let args = cli::Cli::parse();
    match run::run(args) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", run::error_json(&e));
            ExitCode::from(e.exit_code())
        }
    }
}
