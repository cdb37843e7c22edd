mod commands;
mod config;
mod output;

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use config::{Cli, Command, Output, RunConfig};
use output::Report;

const EXIT_RUNTIME: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

fn usage_error(msg: String) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn emit(report: &Report, cfg: &RunConfig) -> io::Result<()> {
    match &cfg.output {
        Output::Stdout => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            report.write(cfg.format, &mut lock)?;
            lock.flush()
        }
        Output::File(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            let mut w = BufWriter::new(File::create(path)?);
            report.write(cfg.format, &mut w)?;
            w.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common) = match &cli.command {
        Command::Spectrum(c) => ("spectrum", c),
        Command::EpScan(c) => ("ep-scan", c),
        Command::Gram { common, .. } => ("gram", common),
        Command::Completeness(c) => ("completeness", c),
        Command::Symmetry(c) => ("symmetry", c),
        Command::Bands { common, .. } => ("bands", common),
        Command::Dimer { common, .. } => ("dimer", common),
        Command::Selftest(c) => ("selftest", c),
    };
    let cfg = common.resolve(name).unwrap_or_else(|e| usage_error(e));
    if name == "ep-scan" && !cfg.is_sorted() {
        usage_error("ep-scan needs a strictly increasing V grid".into());
    }

    let result = match &cli.command {
        Command::Spectrum(_) => commands::cmd_spectrum(&cfg),
        Command::EpScan(_) => commands::cmd_ep_scan(&cfg),
        Command::Gram { n2, n1, .. } => commands::cmd_gram(&cfg, *n2, *n1),
        Command::Completeness(_) => commands::cmd_completeness(&cfg),
        Command::Symmetry(_) => commands::cmd_symmetry(&cfg),
        Command::Bands { t1, k_min, k_max, k_points, .. } => commands::cmd_bands(&cfg, *t1, *k_min, *k_max, *k_points),
        Command::Dimer { g, .. } => commands::cmd_dimer(&cfg, *g),
        Command::Selftest(_) => commands::cmd_selftest(&cfg),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("ptlandau {name}: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Err(e) = emit(&report, &cfg) {
        eprintln!("ptlandau {name}: cannot write output: {e}");
        return ExitCode::from(EXIT_RUNTIME);
    }
    match report.worst_failure() {
        None => ExitCode::SUCCESS,
        Some(worst) => {
            let n = report.failures().count();
            eprintln!(
                "ptlandau {name}: {n} check(s) outside tolerance; worst: {} = {:e} (required {} {:e})",
                worst.name,
                worst.value,
                worst.bound.as_str(),
                worst.limit
            );
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}
