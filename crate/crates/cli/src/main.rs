mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use commands::Failure;
use report::Format;

const THREADS_ENV: &str = "BESSEL_INTERLACE_THREADS";

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!(
                "{THREADS_ENV}: expected a positive integer, got '{v}'"
            )),
        },
        Err(_) => match flag {
            Some(0) => Err("--threads: must be positive".into()),
            other => Ok(other),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };

    let threads = match thread_count(cli.global.threads) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return ExitCode::from(2);
        }
    };

    let outcome = match pool.install(|| commands::run(cli.command)) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Negative(e)) => {
            eprintln!("error: [{}] {e}", e.code());
            return ExitCode::from(1);
        }
    };

    let format = cli.global.format.unwrap_or(outcome.default_format);
    let (body, side) = match format {
        Format::Json => (outcome.report.to_json(), String::new()),
        Format::Csv => outcome.report.to_csv(),
    };
    let written = match &cli.global.output {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if !side.is_empty() {
        eprint!("{side}");
    }
    ExitCode::from(outcome.exit)
}
