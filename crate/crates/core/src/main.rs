fn main() {
    std::process::exit(fcnlab::cli::run(std::env::args_os()));
}
