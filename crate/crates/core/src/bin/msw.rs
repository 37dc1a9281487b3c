fn main() {
    std::process::exit(msw::cli::run(std::env::args_os()));
}
