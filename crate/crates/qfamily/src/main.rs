fn main() {
    std::process::exit(qfamily::app::run());
}
