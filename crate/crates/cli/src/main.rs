use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let limits = match lq_cli::limits_from_env(|k| std::env::var(k).ok()) {
        Ok(l) => l,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(lq_cli::EXIT_USAGE as u8);
        }
    };
    let code = lq_cli::run(
        std::env::args_os(),
        &limits,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
