fn main() {
    std::process::exit(mlcore_cli::run(std::env::args_os()));
}
