mod args;
mod commands;
mod table;

use std::fs::File;
use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, OutputArgs};
use commands::CliError;
use table::Table;

fn emit(table: &Table, out: &OutputArgs) -> Result<(), CliError> {
    match &out.output {
        Some(path) => table.write(out.format, BufWriter::new(File::create(path)?))?,
        None => table.write(out.format, io::stdout().lock())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::BoundStates(a) => emit(&commands::bound_states(&a)?, &a.out),
        Command::PhaseShifts(a) => emit(&commands::phase_shifts(&a)?, &a.out),
        Command::CrossSection(a) => emit(&commands::cross_section(&a)?, &a.out),
        Command::Dcs(a) => emit(&commands::dcs(&a)?, &a.out),
        Command::Wavefunction(a) => emit(&commands::wavefunction(&a)?, &a.out),
        Command::Compare(a) => emit(&commands::compare(&a)?, &a.out),
        Command::Selftest(out) => {
            let (table, failed) = commands::selftest();
            emit(&table, &out)?;
            eprintln!("{} of {} suites passed", table.rows.len() - failed, table.rows.len());
            if failed > 0 {
                return Err(CliError::SelftestFailed(failed));
            }
            Ok(())
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(text) = std::env::var("NCWELL_THREADS") {
        let n: usize = text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("NCWELL_THREADS must be a positive integer, got `{text}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot set thread count: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    let result = configure_threads().and_then(|_| run(cli));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ncwell: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
