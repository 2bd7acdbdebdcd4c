fn main() {
    std::process::exit(saxl::cli::run(std::env::args_os()));
}
