use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gegenbauer_cli::run(std::env::args_os(), &mut out, &mut err);
    // output is buffered so that it is emitted in one deterministic stream
    let _ = io::stdout().write_all(&out);
    let _ = io::stderr().write_all(&err);
    ExitCode::from(code)
}
