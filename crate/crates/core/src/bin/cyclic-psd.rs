fn main() {
    std::process::exit(cyclic_psd::cli::main_exit_code());
}
