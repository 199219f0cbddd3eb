fn main() {
    std::process::exit(schur_cauchy::cli::run(std::env::args_os()));
}
