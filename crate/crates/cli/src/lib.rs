//! File formats, JSON and CSV output, and the command implementations behind the `mwbis`
//! binary. The solvers themselves live in `mwbis-core`.

pub mod args;
pub mod bench;
pub mod error;
pub mod format;
pub mod generate;
pub mod lpformat;
pub mod record;
pub mod solve;
pub mod verify;

use std::io::Write;

use args::{Cli, Command};
use error::CliError;

/// Runs one parsed command line. `command` is echoed into JSON records.
pub fn run(cli: &Cli, command: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve(a) => solve::run_solve(a, command, stdout),
        Command::Generate(a) => generate::run_generate(a, command, stdout),
        Command::VerifyReduction(a) => verify::run_verify(a, stdout),
        Command::Bench(a) => bench::run_bench(a, stdout),
    }
}
