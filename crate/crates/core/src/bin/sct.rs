fn main() {
    std::process::exit(supercharacters::cli::main());
}
