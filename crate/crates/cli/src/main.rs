use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use pid_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let result =
        run(&cli, &mut out, &mut err).and_then(|()| out.flush().map_err(pid_cli::CliError::Output));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "pid: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
