//! The `khp` binary. Exit codes: 0 success, 1 usage error, 2 invariant
//! violation.

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use khovanov_p_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("khp: {e}");
            if let CliError::Invariant { rendering: Some(r), .. } = &e {
                eprint!("{r}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
