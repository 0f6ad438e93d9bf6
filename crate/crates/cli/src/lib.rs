//! File formats and command dispatch for the `liefour` binary.

pub mod commands;
pub mod format;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{CliError, Command, Output, RunReport, Status};

/// Parallelism from `LIEFOUR_THREADS` (0 or unset = automatic).
fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("LIEFOUR_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("LIEFOUR_THREADS must be a count, got `{v}`")))?;
    // A second call in the same process finds the pool already built.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Run with the given argv; returns the exit code (0 pass, 1 a check
/// failed, 2 usage or input error).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match commands::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(
    cli: &commands::Cli,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    configure_threads()?;
    let (text, code, summary) = match commands::execute(&cli.command)? {
        Output::Report(run) => {
            let mut json = serde_json::to_string_pretty(&run).expect("report serialises");
            json.push('\n');
            let code = if run.status == Status::Pass { 0 } else { 1 };
            (json, code, Some(run.summary()))
        }
        Output::Document(doc) => (doc, 0, None),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })?,
    }
    if let (Some(s), false) = (summary, cli.json) {
        let _ = stderr.write_all(s.as_bytes());
    }
    Ok(code)
}
