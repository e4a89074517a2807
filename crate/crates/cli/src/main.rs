use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use slicereg_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
