fn main() {
    std::process::exit(padic_frames::cli::run());
}
