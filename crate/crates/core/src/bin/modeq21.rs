fn main() {
    std::process::exit(modeq21::cli::main());
}
