fn main() {
    std::process::exit(simpath::cli::main_from_env());
}
