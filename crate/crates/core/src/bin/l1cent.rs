fn main() {
    std::process::exit(l1cent::cli::run(std::env::args_os()));
}
