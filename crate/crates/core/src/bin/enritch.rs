fn main() {
    std::process::exit(enritch::cli::main_with_args(std::env::args_os()));
}
