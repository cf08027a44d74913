use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use zforce::cli::{exit, run, Cli, Io};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Ok(v) = std::env::var("ZFORCE_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                    log::warn!("could not size the thread pool: {e}");
                }
            }
            _ => {
                eprintln!("error: ZFORCE_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(exit::USAGE as u8);
            }
        }
    }
    let cli = Cli::parse();
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let mut stdout = BufWriter::new(io::stdout().lock());
    let mut stderr = io::stderr().lock();
    let code = run(
        cli,
        &mut Io {
            stdin: &mut stdin,
            stdout: &mut stdout,
            stderr: &mut stderr,
        },
    );
    if stdout.flush().is_err() && code == exit::OK {
        return ExitCode::from(exit::USAGE as u8);
    }
    ExitCode::from(code as u8)
}
