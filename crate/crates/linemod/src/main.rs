fn main() {
    std::process::exit(linemod::cli::main_with_args());
}
