use clap::Parser;

use weylring::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let output = execute(cli);
    if !output.stdout.is_empty() {
        print!("{}", output.stdout);
    }
    if !output.stderr.is_empty() {
        eprint!("{}", output.stderr);
    }
    std::process::exit(output.code);
}
