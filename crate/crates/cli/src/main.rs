use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kerrcat::cat_dump::{parse_complex, run_cat};
use kerrcat::config::{resolve_sweep_config, RawSweepInputs};
use kerrcat::energy::{run_energy_scaling, to_csv as energy_csv};
use kerrcat::fourier_report::run_verify_fourier;
use kerrcat::sweep::{run_sweep, to_csv as sweep_csv};
use kerrcat::{emit, CliError};

#[derive(Parser)]
#[command(
    name = "kerrcat",
    about = "Entangled coherent cat states: entropy sweeps, coefficient checks, energy scaling",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropy over an (alpha-squared × M) grid, or a free-τ grid; CSV out.
    Sweep {
        /// Comma-separated |α|² values, e.g. 1,10
        #[arg(long = "alpha-squared", value_delimiter = ',')]
        alpha_squared: Option<Vec<f64>>,
        /// Comma-separated cat orders; ranges allowed, e.g. 2..20
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<String>>,
        /// gram, fock or both
        #[arg(long)]
        method: Option<String>,
        /// Fock cutoff override (per mode)
        #[arg(long)]
        cutoff: Option<usize>,
        /// Output CSV path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Flat key=value config file; flags override it
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated τ values evolved off the π/M lattice (fock only)
        #[arg(long = "tau-grid", value_delimiter = ',')]
        tau_grid: Option<Vec<f64>>,
    },
    /// Compare closed-form series coefficients against the inversion oracle.
    VerifyFourier {
        /// Largest cat order to check
        #[arg(long = "max-m", default_value_t = 64)]
        max_m: usize,
        /// Output JSON path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump one entangled cat state as JSON with norm, entropy and spectrum.
    Cat {
        /// Coherent amplitude, e.g. 1, 1+2i, -0.5i
        #[arg(long)]
        alpha: String,
        /// Cat order
        #[arg(long)]
        m: usize,
        /// Output JSON path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest |α|² reaching a fraction of log₂M, per cat order; CSV out.
    EnergyScaling {
        /// Comma-separated cat orders; ranges allowed
        #[arg(long, value_delimiter = ',')]
        m: Vec<String>,
        /// Target entropy fraction of log₂M, strictly inside (0, 1)
        #[arg(long)]
        fraction: f64,
        /// Output CSV path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Sweep {
            alpha_squared,
            m,
            method,
            cutoff,
            out,
            config,
            tau_grid,
        } => {
            let flags = RawSweepInputs {
                alpha_squared,
                m,
                method,
                cutoff,
                out,
                tau_grid,
            };
            let config = resolve_sweep_config(flags, config.as_deref())?;
            let rows = run_sweep(&config)?;
            emit(&sweep_csv(&rows), config.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyFourier { max_m, out } => {
            if max_m < 1 {
                return Err(CliError::Config("max-m must be at least 1".into()));
            }
            let report = run_verify_fourier(max_m);
            let mut json = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Runtime(e.to_string()))?;
            json.push('\n');
            emit(&json, out.as_deref())?;
            if report.pass {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("verify-fourier: deviation beyond tolerance");
                Ok(ExitCode::from(1))
            }
        }
        Command::Cat { alpha, m, out } => {
            let alpha = parse_complex(&alpha)?;
            let dump = run_cat(alpha, m)?;
            let mut json = serde_json::to_string_pretty(&dump)
                .map_err(|e| CliError::Runtime(e.to_string()))?;
            json.push('\n');
            emit(&json, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::EnergyScaling { m, fraction, out } => {
            let m = kerrcat::config::parse_m_tokens(&m)?;
            let rows = run_energy_scaling(&m, fraction)?;
            emit(&energy_csv(&rows), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
