fn main() {
    std::process::exit(visikit::cli::run(std::env::args_os()));
}
