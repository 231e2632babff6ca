fn main() {
    std::process::exit(ivpoly::cli::run());
}
