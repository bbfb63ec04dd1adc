use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qutrit_core::adjoint::{single_qutrit_ct_obstruction, Verdict};
use qutrit_core::analysis::{
    circuit_ring_certificate, hierarchy_level, is_clifford, refute_phase_membership,
};
use qutrit_core::catalog::run_catalog;
use qutrit_core::circuit::{parse_circuit, t_count, Circuit, Comparison, Registry};
use qutrit_core::rings::RingTag;
use qutrit_core::sim::{circuit_matrix, parse_target};
use qutrit_core::verify::verify_circuit;

/// Overrides the bundled `circuits/` data.
const CIRCUITS_ENV: &str = "QUTRIT_EXACT_CIRCUITS";

#[derive(Parser)]
#[command(
    name = "qutrit",
    version,
    about = "Exact verification of qutrit Clifford+T circuits"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the exact unitary of a circuit.
    Matrix {
        file: PathBuf,
        /// Also print a decimal approximation.
        #[arg(long)]
        decimal: bool,
    },
    /// Count T and T-dagger gates after expanding controlled gates.
    Tcount { file: PathBuf },
    /// Compare a circuit with a target expression such as "R x I".
    Verify {
        file: PathBuf,
        #[arg(long)]
        target: String,
        /// exact, phase, or "cphase PHASE".
        #[arg(long, default_value = "exact")]
        mode: String,
        /// Skip the check of the Clifford+T expansion.
        #[arg(long)]
        raw: bool,
    },
    /// Classify a circuit's unitary (defaults to --clifford).
    Classify {
        file: PathBuf,
        #[arg(long)]
        clifford: bool,
        /// Search the Clifford hierarchy up to this level.
        #[arg(long, value_name = "CAP")]
        hierarchy: Option<u32>,
        /// Ring tag, e.g. Tomega or Tzeta.
        #[arg(long, value_name = "TAG")]
        ring: Option<RingTag>,
        /// Single-qutrit Clifford+T obstruction from the adjoint representation.
        #[arg(long)]
        obstruct: bool,
    },
    /// Re-check every bundled identity and construction.
    Catalog,
}

/// Reports a failure to run (exit 2), as opposed to a negative verdict.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

fn load(path: &Path) -> Result<Circuit, Fatal> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    parse_circuit(&text).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn registry() -> Result<Registry, String> {
    match std::env::var_os(CIRCUITS_ENV) {
        Some(dir) => Registry::load_dir(Path::new(&dir)),
        None => Registry::builtin(),
    }
    .map_err(|e| e.to_string())
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Fatal> {
    match cmd {
        Cmd::Matrix { file, decimal } => {
            let u = circuit_matrix(&load(&file)?)?;
            println!("dim: {}", u.dim());
            println!("{}", u.symbolic());
            if decimal {
                println!("{}", u.decimal());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tcount { file } => {
            let c = load(&file)?;
            println!("{}", t_count(&c, &registry().map_err(Fatal)?)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            file,
            target,
            mode,
            raw,
        } => {
            let c = load(&file)?;
            let target = parse_target(&target)?;
            let mode: Comparison = mode.parse().map_err(Fatal)?;
            let reg = if raw {
                None
            } else {
                Some(registry().map_err(Fatal)?)
            };
            let v = verify_circuit(&c, &target, mode, reg.as_ref())?;
            println!("{v}");
            Ok(verdict(v.holds()))
        }
        Cmd::Classify {
            file,
            mut clifford,
            hierarchy,
            ring,
            obstruct,
        } => {
            let c = load(&file)?;
            let u = circuit_matrix(&c)?;
            if !clifford && hierarchy.is_none() && ring.is_none() && !obstruct {
                clifford = true;
            }
            let mut all = true;
            if clifford {
                let rep = is_clifford(&u)?;
                all &= rep.clifford;
                print!("{rep}");
            }
            if let Some(cap) = hierarchy {
                let rep = hierarchy_level(&u, cap)?;
                all &= rep.level.is_some();
                print!("{rep}");
            }
            if let Some(tag) = ring {
                let cert = circuit_ring_certificate(&c, tag)?;
                all &= cert.holds;
                println!("{cert}");
                if !cert.holds {
                    println!("{}", refute_phase_membership(&u, tag));
                }
            }
            if obstruct {
                let rep = single_qutrit_ct_obstruction(&u)?;
                all &= matches!(rep.verdict, Verdict::Consistent { .. });
                println!("{rep}");
            }
            Ok(verdict(all))
        }
        Cmd::Catalog => {
            let reg = match registry() {
                Ok(r) => r,
                Err(e) => {
                    println!("FAILED    registry               {e}");
                    return Ok(ExitCode::from(1));
                }
            };
            let results = run_catalog(&reg);
            for r in &results {
                println!("{r}");
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            println!(
                "{} claims, {} verified, {failed} failed",
                results.len(),
                results.len() - failed
            );
            Ok(verdict(failed == 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
