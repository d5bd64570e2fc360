mod args;
mod commands;
mod config;
mod fail;
mod output;
mod params;
mod physical;
mod sweep;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use config::Config;
use fail::Failure;
use params::RunParams;

fn run(argv: &[String]) -> Result<(), Failure> {
    let cli = Cli::parse_from(argv);
    let g = &cli.global;
    let config = match &g.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let out = g.out.as_deref();
    match &cli.command {
        Command::Dispersion { medium, sweep } => {
            let params = RunParams::resolve(&config, medium, None, Some(sweep), g.tol)?;
            output::emit(&commands::dispersion(argv, &params, g.threads)?, out)
        }
        Command::Rate {
            medium,
            orbit,
            sweep,
            verify,
        } => {
            let params = RunParams::resolve(&config, medium, Some(orbit), Some(sweep), g.tol)?;
            let (csv, check) = commands::rate(argv, &params, g.threads, *verify)?;
            output::emit(&csv, out)?;
            check
        }
        Command::Temperature {
            medium,
            orbit,
            sweep,
            verify,
        } => {
            let params = RunParams::resolve(&config, medium, Some(orbit), Some(sweep), g.tol)?;
            let (csv, check) = commands::temperature(argv, &params, g.threads, *verify)?;
            output::emit(&csv, out)?;
            check
        }
        Command::MapPhysical(setup) => output::emit(&physical::map_physical(&config, setup)?, out),
        Command::Verify {
            medium,
            orbit,
            wightman,
        } => {
            let params = RunParams::resolve(&config, medium, Some(orbit), None, g.tol)?;
            let report = verify::run(&params, *wightman)?;
            print!("{}", verify::table(&report));
            if let Some(path) = out {
                let mut json = serde_json::to_string_pretty(&report).expect("report");
                json.push('\n');
                output::emit(&json, Some(path))?;
            }
            if report.passed {
                Ok(())
            } else {
                Err(Failure::verify("verification failed"))
            }
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    match run(&argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f.json {
                Some(json) => println!("{json}"),
                None => eprintln!("error: {f}"),
            }
            ExitCode::from(f.code)
        }
    }
}
