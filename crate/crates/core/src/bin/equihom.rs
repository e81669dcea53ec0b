fn main() {
    std::process::exit(equihom::cli::run(std::env::args_os()));
}
