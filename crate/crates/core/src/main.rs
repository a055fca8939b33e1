fn main() {
    std::process::exit(quasialg::cli_main());
}
