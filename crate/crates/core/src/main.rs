fn main() {
    let code = closurekit::cli::run(std::env::args_os());
    std::process::exit(code);
}
