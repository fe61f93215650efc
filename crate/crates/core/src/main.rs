fn main() {
    std::process::exit(sigspec::cli::run(std::env::args_os()));
}
