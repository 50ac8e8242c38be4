fn main() {
    std::process::exit(densecode::cli::main_with_args(std::env::args_os()));
}
