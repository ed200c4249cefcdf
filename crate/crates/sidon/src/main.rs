fn main() {
    std::process::exit(sidon::cli::run());
}
