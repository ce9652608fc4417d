fn main() {
    let mut out = std::io::stdout();
    std::process::exit(lie4::cli::run(std::env::args(), &mut out));
}
