fn main() {
    std::process::exit(xist::cli::run(std::env::args_os()));
}
