mod args;
mod decompose;
mod failure;
mod format;
mod methods;
mod settings;
mod solve;
mod sweep;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use failure::Failure;

fn run(cli: &Cli) -> Result<(), Failure> {
    let config = settings::resolve(&cli.global).map_err(|e| Failure::Usage(format!("{e:#}")))?;
    trinomial_core::sum_rule_self_check()
        .map_err(|e| Failure::Numeric(format!("startup self-check: {e}")))?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let format = cli.global.format;
    let result = match &cli.command {
        Command::Solve(a) => solve::run(a, format.unwrap_or(Format::Plain), &config, &mut out),
        Command::Verify(a) => verify::run(a, format.unwrap_or(Format::Plain), &config, &mut out),
        Command::Sweep(_) if !matches!(format, None | Some(Format::Csv)) => {
            Err(Failure::Usage("sweep writes CSV only".into()))
        }
        Command::Sweep(a) => sweep::run(a, &config, &mut out),
        Command::Decompose(_) if format == Some(Format::Csv) => {
            Err(Failure::Usage("decompose writes plain text or JSON".into()))
        }
        Command::Decompose(a) => decompose::run(a, format.unwrap_or(Format::Plain), &mut out),
    };
    let _ = out.flush();
    result
}

fn main() -> ExitCode {
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
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("trinomial: {f}");
            f.exit_code()
        }
    }
}
