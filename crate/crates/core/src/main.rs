fn main() {
    std::process::exit(qlimits::cli::run(std::env::args_os()));
}
