fn main() {
    std::process::exit(cmdual::cli::main_with(std::env::args_os()));
}
