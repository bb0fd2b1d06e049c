fn main() {
    std::process::exit(thickness::cli::main_with(std::env::args_os()));
}
