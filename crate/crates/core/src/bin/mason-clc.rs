fn main() {
    std::process::exit(mason_clc::cli::main_with_args(std::env::args_os()));
}
