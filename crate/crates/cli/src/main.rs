fn main() {
    std::process::exit(dircyc_cli::run(std::env::args_os()));
}
