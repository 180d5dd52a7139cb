fn main() {
    std::process::exit(hopfquiver_cli::run(std::env::args_os()));
}
