use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use socksort_cli::{run_with_report, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, report) = run_with_report(&cli.command);
    if let Some(path) = &cli.report {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, text + "\n") {
            eprintln!("cannot write report to {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let code = match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            outcome.exit_code
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.exit_code()
        }
    };
    std::io::stdout().flush().ok();
    ExitCode::from(code as u8)
}
