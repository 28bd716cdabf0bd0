fn main() {
    std::process::exit(betamix::cli::run());
}
