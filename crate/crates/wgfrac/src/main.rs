fn main() {
    std::process::exit(wgfrac::cli::main_from(std::env::args_os()));
}
