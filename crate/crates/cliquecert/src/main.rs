fn main() {
    std::process::exit(cliquecert::cli::run());
}
