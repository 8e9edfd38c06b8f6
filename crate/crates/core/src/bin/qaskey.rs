fn main() {
    std::process::exit(qaskey::cli::main());
}
