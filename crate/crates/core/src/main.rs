fn main() {
    std::process::exit(palsym::cli::main());
}
