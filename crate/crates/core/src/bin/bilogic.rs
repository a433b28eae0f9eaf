fn main() {
    std::process::exit(bilogic::cli::main_with_args(std::env::args_os()));
}
