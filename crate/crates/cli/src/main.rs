fn main() {
    std::process::exit(sumbasis_cli::run());
}
