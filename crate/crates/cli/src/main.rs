use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::Parser;
use ellipcp::{run, Cli, Style};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Style::from_env(std::io::stdout().is_terminal()).and_then(|style| run(&cli, style));
    match result {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(output.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            match output.failure {
                None => ExitCode::SUCCESS,
                Some(e) => {
                    eprintln!("ellipcp: {e}");
                    ExitCode::from(e.exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("ellipcp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
