fn main() {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = berger_spectra::cli::run(std::env::args_os(), &mut out, &mut std::io::stderr());
    drop(out);
    std::process::exit(code);
}
