use std::process::exit;

fn main() {
    exit(tce::cli::run_cli(std::env::args()));
}
