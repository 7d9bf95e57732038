fn main() {
    std::process::exit(trimetric::cli::run(std::env::args()));
}
