fn main() {
    std::process::exit(nervelat::cli::run(std::env::args_os()));
}
