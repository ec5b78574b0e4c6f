use std::process::exit;

fn main() {
    exit(gpcp::cli::run(std::env::args_os()));
}
