//! `delannoy` binary: data on stdout, diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
//! mismatch.

mod args;
mod cmd;
mod output;

use clap::error::ErrorKind;
use clap::Parser;

fn main() {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match cmd::run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.exit);
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}
