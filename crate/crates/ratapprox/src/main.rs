fn main() {
    std::process::exit(ratapprox::cli::run(std::env::args_os()));
}
