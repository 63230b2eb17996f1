fn main() {
    std::process::exit(galtab::cli::main_entry());
}
