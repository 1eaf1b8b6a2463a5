use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = rsymbols::cli::run(std::env::args_os());
    std::io::stdout().write_all(&out.stdout).expect("stdout");
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
