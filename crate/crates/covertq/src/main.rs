fn main() {
    std::process::exit(covertq::run_main());
}
