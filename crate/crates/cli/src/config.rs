//! Command-line arguments and their validated form.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use ptlandau::{Cone, FieldSign};

use crate::output::Format;

pub const OUT_DIR_ENV: &str = "PTLANDAU_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "ptlandau", version, about = "Landau-level spectra of PT-deformed graphene Dirac cones")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Landau-level energies along a V sweep.
    Spectrum(CommonArgs),
    /// Completeness of the right eigenvectors at each V of a sorted grid.
    EpScan(CommonArgs),
    /// Overlaps <Phi, Psi> within each sector.
    Gram {
        #[command(flatten)]
        common: CommonArgs,
        /// Single Landau level; every level 1..=n2-max when omitted.
        #[arg(long)]
        n2: Option<usize>,
        /// Degeneracy index (occupation of the spectator mode).
        #[arg(long, default_value_t = 0)]
        n1: usize,
    },
    /// Per-level eigenvector coalescence and the exceptional-point witness.
    Completeness(CommonArgs),
    /// P, T and PT conjugation residuals on the square truncation of size n2-max.
    Symmetry(CommonArgs),
    /// Tight-binding bands on a square k-grid, with mu_A = iV and mu_B = -iV.
    Bands {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 1.0)]
        t1: f64,
        #[arg(long, default_value_t = -4.5, allow_negative_numbers = true)]
        k_min: f64,
        #[arg(long, default_value_t = 4.5, allow_negative_numbers = true)]
        k_max: f64,
        /// Points per axis.
        #[arg(long, default_value_t = 61)]
        k_points: usize,
    },
    /// Two-site gain/loss dimer.
    Dimer {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 1.0)]
        g: f64,
    },
    /// Quick internal consistency battery.
    Selftest(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum ConeArg {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "Kp", alias = "K'", alias = "kp", alias = "Kprime")]
    KPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    #[value(name = "plus", alias = "+")]
    Plus,
    #[value(name = "minus", alias = "-")]
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Potential strength; accepts `sqrt(x)`.
    #[arg(long = "V", conflicts_with = "v_grid", allow_negative_numbers = true)]
    pub v: Option<String>,
    /// `start:stop:step`, or a comma-separated list.
    #[arg(long = "V-grid", allow_negative_numbers = true)]
    pub v_grid: Option<String>,
    #[arg(long, value_enum, default_value = "K")]
    pub cone: ConeArg,
    #[arg(long, value_enum, default_value = "plus", allow_hyphen_values = true)]
    pub field_sign: FieldArg,
    #[arg(long, default_value_t = 64)]
    pub n2_max: usize,
    #[arg(long, default_value_t = 0)]
    pub n1_max: usize,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Exceptional-point snapping tolerance on |n2 - V^2|.
    #[arg(long, default_value_t = 1e-12)]
    pub tol_ep: f64,
    /// Tolerance for quantities that should vanish.
    #[arg(long, default_value_t = 1e-12)]
    pub tol_zero: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    /// Output file; defaults to `<out-dir>/<command>.<ext>` or stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = OUT_DIR_ENV)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Stdout,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub cone: Cone,
    pub field_sign: FieldSign,
    pub v_grid: Vec<f64>,
    pub n2_max: usize,
    pub n1_max: usize,
    pub epsilon: f64,
    pub tol_ep: f64,
    pub tol_zero: f64,
    pub format: Format,
    pub output: Output,
}

/// A number, or `sqrt(x)`.
pub fn parse_value(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let x = if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        parse_value(inner)?.sqrt()
    } else {
        t.parse::<f64>().map_err(|_| format!("not a number: {s:?}"))?
    };
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("not a finite number: {s:?}"))
    }
}

/// `start:stop:step` (inclusive, step > 0) or `a,b,c`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (a, b, h) = (parse_value(start)?, parse_value(stop)?, parse_value(step)?);
            if h <= 0.0 {
                return Err(format!("grid step must be positive, got {h}"));
            }
            if b < a {
                return Err(format!("grid stop {b} is below start {a}"));
            }
            let count = ((b - a) / h + 1e-9).floor() as usize + 1;
            if count > 1_000_000 {
                return Err(format!("grid has {count} points"));
            }
            Ok((0..count).map(|k| a + k as f64 * h).collect())
        }
        [_] => s.split(',').map(parse_value).collect(),
        _ => Err(format!("grid must be start:stop:step or a comma list, got {s:?}")),
    }
}

impl CommonArgs {
    pub fn resolve(&self, command: &str) -> Result<RunConfig, String> {
        let v_grid = match (&self.v, &self.v_grid) {
            (Some(v), _) => vec![parse_value(v)?],
            (None, Some(g)) => parse_grid(g)?,
            (None, None) => vec![0.0],
        };
        if v_grid.is_empty() {
            return Err("V grid is empty".into());
        }
        if let Some(v) = v_grid.iter().find(|v| **v < 0.0) {
            return Err(format!("V must be non-negative, got {v}"));
        }
        if self.n2_max < 1 {
            return Err("n2-max must be at least 1".into());
        }
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(format!("epsilon must be positive, got {}", self.epsilon));
        }
        for (name, t) in [("tol-ep", self.tol_ep), ("tol-zero", self.tol_zero)] {
            if !(t > 0.0 && t.is_finite()) {
                return Err(format!("{name} must be positive, got {t}"));
            }
        }
        let format = match self.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        };
        let output = match (&self.out, &self.out_dir) {
            (Some(p), _) => Output::File(p.clone()),
            (None, Some(dir)) => Output::File(dir.join(format!("{command}.{}", format.extension()))),
            (None, None) => Output::Stdout,
        };
        Ok(RunConfig {
            cone: match self.cone {
                ConeArg::K => Cone::K,
                ConeArg::KPrime => Cone::KPrime,
            },
            field_sign: match self.field_sign {
                FieldArg::Plus => FieldSign::Plus,
                FieldArg::Minus => FieldSign::Minus,
            },
            v_grid,
            n2_max: self.n2_max,
            n1_max: self.n1_max,
            epsilon: self.epsilon,
            tol_ep: self.tol_ep,
            tol_zero: self.tol_zero,
            format,
            output,
        })
    }
}

impl RunConfig {
    pub fn is_sorted(&self) -> bool {
        self.v_grid.windows(2).all(|w| w[0] < w[1])
    }

    /// Echo of the physics parameters; output location is left out so the
    /// file contents do not depend on where they are written.
    pub fn to_json(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("cone".into(), json!(self.cone.to_string()));
        m.insert("field_sign".into(), json!(self.field_sign.to_string()));
        m.insert("V_grid".into(), json!(self.v_grid));
        m.insert("n2_max".into(), json!(self.n2_max));
        m.insert("n1_max".into(), json!(self.n1_max));
        m.insert("epsilon".into(), json!(self.epsilon));
        m.insert("tol_ep".into(), json!(self.tol_ep));
        m.insert("tol_zero".into(), json!(self.tol_zero));
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_and_grids() {
        assert_eq!(parse_value("0.9").unwrap(), 0.9);
        assert_eq!(parse_value("sqrt(2)").unwrap(), 2f64.sqrt());
        assert!(parse_value("nan").is_err());
        assert_eq!(parse_grid("0.8,1.0,1.2").unwrap(), vec![0.8, 1.0, 1.2]);
        let g = parse_grid("0.8:1.2:0.2").unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g[1], 1.0);
        assert_eq!(parse_grid("0:1:0.25").unwrap().len(), 5);
        assert!(parse_grid("1:0:0.1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("0:1").is_err());
    }

    #[test]
    fn resolve_defaults() {
        let cli = Cli::try_parse_from(["ptlandau", "spectrum", "--V", "0.9"]).unwrap();
        let Command::Spectrum(args) = cli.command else { panic!() };
        let cfg = args.resolve("spectrum").unwrap();
        assert_eq!(cfg.v_grid, vec![0.9]);
        assert_eq!((cfg.n2_max, cfg.n1_max), (64, 0));
        assert_eq!(cfg.cone, Cone::K);
        assert_eq!(cfg.format, Format::Csv);
    }

    #[test]
    fn cone_and_sign_aliases() {
        let cli = Cli::try_parse_from(["ptlandau", "spectrum", "--cone", "K'", "--field-sign", "-"]).unwrap();
        let Command::Spectrum(args) = cli.command else { panic!() };
        let cfg = args.resolve("spectrum").unwrap();
        assert_eq!((cfg.cone, cfg.field_sign), (Cone::KPrime, FieldSign::Minus));
    }

    #[test]
    fn v_and_grid_conflict() {
        assert!(Cli::try_parse_from(["ptlandau", "spectrum", "--V", "1", "--V-grid", "0:1:0.5"]).is_err());
    }

    #[test]
    fn invalid_values_rejected() {
        let cli = Cli::try_parse_from(["ptlandau", "spectrum", "--V", "-1"]).unwrap();
        let Command::Spectrum(args) = cli.command else { panic!() };
        assert!(args.resolve("spectrum").is_err());
        let cli = Cli::try_parse_from(["ptlandau", "spectrum", "--n2-max", "0"]).unwrap();
        let Command::Spectrum(args) = cli.command else { panic!() };
        assert!(args.resolve("spectrum").is_err());
    }
}
