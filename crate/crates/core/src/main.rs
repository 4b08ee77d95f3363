use std::io::{IsTerminal, Read, Write};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let mut stdin = Vec::new();
    // only subcommands given `-` consume stdin
    if argv.iter().any(|a| a == "-") && !std::io::stdin().is_terminal() {
        let _ = std::io::stdin().read_to_end(&mut stdin);
    }
    let outcome = tileproof::cli::run(&argv, &stdin);
    let _ = std::io::stdout().write_all(&outcome.stdout);
    let _ = std::io::stderr().write_all(&outcome.stderr);
    std::process::exit(outcome.status.code());
}
