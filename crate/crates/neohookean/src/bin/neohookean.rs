//! Command-line entry point; see `neohookean --help`.

fn main() {
    std::process::exit(neohookean::cli::run(std::env::args_os()));
}
