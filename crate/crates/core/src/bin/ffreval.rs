fn main() {
    std::process::exit(ffreval::cli::main());
}
