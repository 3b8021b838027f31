fn main() {
    std::process::exit(sccore_cli::main_with_args(std::env::args_os()));
}
