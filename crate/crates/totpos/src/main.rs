fn main() {
    std::process::exit(totpos::cli::main_entry());
}
