use std::io::{stderr, stdout, BufWriter, Write};

fn main() {
    let out = stdout();
    let err = stderr();
    let mut out = BufWriter::new(out.lock());
    let mut err = err.lock();
    let code = matroid_cli::run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
