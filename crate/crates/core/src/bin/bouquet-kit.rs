use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = bouquet_kit::cli::run_command(std::env::args_os());
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.exit_code as u8)
}
