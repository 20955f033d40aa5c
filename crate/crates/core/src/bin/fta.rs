fn main() {
    let code = fta_core::cli::run(std::env::args_os());
    std::process::exit(code);
}
