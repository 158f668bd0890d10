fn main() {
    std::process::exit(ringline::cli::run(std::env::args_os()));
}
