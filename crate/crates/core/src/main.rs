use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = qkflag::cli::run_from(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    if code == 2 {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = stdout.write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
