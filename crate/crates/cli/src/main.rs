use std::process::ExitCode;

use clap::Parser;
use weylkit_cli::commands::{output_path, write_output};
use weylkit_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli.command) {
        Ok(out) => match write_output(output_path(&cli.command), &out.text) {
            Ok(()) => out.exit_code,
            Err(e) => {
                eprintln!("weylkit: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("weylkit: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
