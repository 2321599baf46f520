fn main() {
    std::process::exit(noiter::cli::run(std::env::args_os()));
}
