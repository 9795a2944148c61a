//! Command-line harness for the identity suites.
//!
//! Exit codes: 0 all checks pass (inconclusive diagnostics allowed),
//! 1 at least one failed check, 2 usage error, 3 internal rewrite cap.

use clap::Parser;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use qconformal::verify::{
    emit_report, exit_code, run_suite, BasisSel, Format, Suite, SuiteConfig,
};
use qconformal::waves::ExpPoly;

#[derive(Parser)]
#[command(
    name = "verify",
    version,
    about = "Exact verification suites for the q-deformed conformal equations",
    after_help = "Suites: dalembert, maxwell, current, weyl, omega, algebra, classical"
)]
struct Cli {
    /// Suite to run
    suite: Suite,

    /// Basis selection: hat, tilde or both
    #[arg(long, default_value = "both")]
    basis: BasisSel,

    /// Largest plane-wave component index
    #[arg(long = "s-max", default_value_t = 3)]
    s_max: i64,

    /// Largest momentum-prefactor degree index
    #[arg(long = "m-max", default_value_t = 2)]
    m_max: u32,

    /// Hierarchy parameter for the operator builders
    #[arg(long, default_value_t = 0)]
    n: i64,

    /// Exponent polynomial coefficients c00,c10,c01,c20,c11,c02
    #[arg(long = "p-poly", value_parser = parse_poly)]
    p_poly: Option<ExpPoly>,

    /// Root seed for all randomized grids
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Skip cone reduction and report raw residuals
    #[arg(long = "off-cone", default_value_t = false)]
    off_cone: bool,

    /// Output format: json (one record per line) or text table
    #[arg(long, default_value = "text")]
    format: Format,

    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_poly(s: &str) -> Result<ExpPoly, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 6 {
        return Err("expected six comma-separated integers c00,c10,c01,c20,c11,c02".into());
    }
    let mut c = [0i64; 6];
    for (i, p) in parts.iter().enumerate() {
        c[i] = p
            .trim()
            .parse()
            .map_err(|e| format!("bad coefficient '{p}': {e}"))?;
    }
    Ok(ExpPoly::from_list(&c))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = SuiteConfig {
        suite: cli.suite,
        basis: cli.basis,
        s_max: cli.s_max,
        m_max: cli.m_max,
        n: cli.n,
        poly: cli.p_poly,
        seed: cli.seed,
        on_cone: !cli.off_cone,
    };
    let reports = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("internal engine error: {}", e.0);
            return ExitCode::from(3);
        }
    };
    let write_result = match &cli.out {
        Some(path) => {
            File::create(path).and_then(|mut f| emit_report(&reports, cli.format, &mut f))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            emit_report(&reports, cli.format, &mut lock).and_then(|_| lock.flush())
        }
    };
    if let Err(e) = write_result {
        eprintln!("failed to write report: {e}");
        return ExitCode::from(3);
    }
    ExitCode::from(exit_code(&reports) as u8)
}
