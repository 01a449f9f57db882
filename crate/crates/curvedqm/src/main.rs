fn main() {
    std::process::exit(curvedqm::run(std::env::args_os()));
}
