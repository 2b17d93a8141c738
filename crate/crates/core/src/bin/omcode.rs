use std::io::{Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut read_stdin = || {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    };
    let result = omcode::cli::run(std::env::args_os(), &mut read_stdin);
    let _ = std::io::stdout().write_all(result.stdout().as_bytes());
    let _ = std::io::stderr().write_all(result.stderr().as_bytes());
    ExitCode::from(result.exit_code() as u8)
}
