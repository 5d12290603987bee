use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use symcanon_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli.command, &mut std::io::stdin().lock());
    let mut out = std::io::stdout().lock();
    if out.write_all(report.render(cli.format).as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(report.exit_code() as u8)
}
