use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use mwbis::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().collect::<Vec<_>>().join(" ");
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = mwbis::run(&cli, &command, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Into::into)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
