use std::io::{self, Write};

use clap::Parser;

use novikov_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let out = run(cli);
    if !out.stdout.is_empty() {
        // exit quietly when the reader hangs up (novlag ... | head)
        if let Err(e) = writeln!(io::stdout().lock(), "{}", out.stdout) {
            if e.kind() != io::ErrorKind::BrokenPipe {
                let _ = writeln!(io::stderr(), "error: {}", e);
                std::process::exit(1);
            }
        }
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(io::stderr(), "{}", out.stderr);
    }
    std::process::exit(out.code);
}
