use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use nilcone_cli::{run, CliConfig};

fn main() -> ExitCode {
    // Usage errors exit 2 with the usage text; --help and --version exit 0.
    let config = CliConfig::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = run(&config, &mut out);
    if out.flush().is_err() {
        return ExitCode::from(nilcone_cli::EXIT_INPUT);
    }
    ExitCode::from(code)
}
