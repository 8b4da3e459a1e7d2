fn main() {
    std::process::exit(polariton_lab::cli::run(std::env::args_os()));
}
