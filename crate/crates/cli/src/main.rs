use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = descent_cli::run(std::env::args_os().skip(1));
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(u8::try_from(result.exit_code).unwrap_or(2))
}
