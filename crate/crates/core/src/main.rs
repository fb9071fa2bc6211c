use std::io;
use std::process;

fn main() {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code =
        proper_rationals::cli::run_cli(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    process::exit(code);
}
