fn main() {
    std::process::exit(unitfit::cli::run(std::env::args_os()));
}
