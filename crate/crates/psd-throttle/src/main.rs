fn main() {
    std::process::exit(psd_throttle::cli::run());
}
