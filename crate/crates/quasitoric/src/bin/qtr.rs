use std::io::Write;

fn main() {
    let result = quasitoric::cli::dispatch(std::env::args_os());
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let _ = out.write_all(result.stdout.as_bytes());
    let _ = err.write_all(result.stderr.as_bytes());
    let _ = out.flush();
    let _ = err.flush();
    std::process::exit(result.exit_code);
}
