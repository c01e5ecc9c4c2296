//! Command-line front end: capacity certificates, quantum products,
//! Gromov-Witten invariants and verification suites, all with
//! byte-reproducible JSON output.

mod grammar;

use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use symcap::capacities::{capacity_bounds, Quantity};
use symcap::json::J;
use symcap::quantum::{gw_invariant, quantum_product, GrassSpec, Partition};
use symcap::verify::run_suite;

#[derive(Parser)]
#[command(
    name = "symcap",
    about = "Capacity certificates and quantum Schubert calculus for Hermitian symmetric spaces",
    version
)]
struct Cli {
    /// Write the same bytes to a file in addition to stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derive a two-sided bound certificate for a space expression.
    ///
    /// Quantities: cG, cHZ, cHZ_pi1, C2, C2o, GW.  Exit code 0 when both
    /// bounds are known, 3 when any bound is unknown.
    Capacity { expr: String, quantity: String },

    /// Quantum product of two Schubert classes on G(k, n).
    ///
    /// Partitions are comma-separated part lists; the empty partition is
    /// "" or "0".
    Qh {
        k: usize,
        n: u32,
        lambda: String,
        mu: String,
    },

    /// Three-point genus-zero Gromov-Witten invariant on G(k, n).
    Gw {
        k: usize,
        n: u32,
        lambda: String,
        mu: String,
        nu: String,
        d: u32,
    },

    /// Run a named verification suite: jordan, spectral, embeddings,
    /// quantum or all.  Exit code 0 iff every required check passes.
    Verify {
        suite: String,
        /// samples per check
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// seed for the deterministic samplers
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// override the suite tolerance
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn partition_json(p: &Partition) -> J {
    J::Arr(p.parts().iter().map(|&x| J::Int(x as i64)).collect())
}

fn emit(out: &Option<PathBuf>, value: &J) -> std::io::Result<()> {
    let mut bytes = value.render().into_bytes();
    bytes.push(b'\n');
    std::io::stdout().write_all(&bytes)?;
    if let Some(path) = out {
        std::fs::write(path, &bytes)?;
    }
    Ok(())
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Capacity { expr, quantity } => {
            let space = match grammar::parse_space(expr) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let q = match Quantity::parse(quantity) {
                Ok(q) => q,
                Err(e) => return usage_error(e),
            };
            let cert = match capacity_bounds(&space, q) {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            if emit(&cli.out, &cert.to_json()).is_err() {
                return ExitCode::from(1);
            }
            if cert.both_known() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Command::Qh { k, n, lambda, mu } => {
            let run = || -> symcap::Result<J> {
                let spec = GrassSpec::new(*k, *n)?;
                let lam = Partition::parse(lambda)?;
                let m = Partition::parse(mu)?;
                let prod = quantum_product(spec, &lam, &m)?;
                let mut terms: Vec<_> = prod
                    .terms()
                    .iter()
                    .map(|((nu, d), c)| (*d, nu.clone(), *c))
                    .collect();
                terms.sort();
                Ok(J::obj(vec![
                    ("k", J::Int(*k as i64)),
                    ("n", J::Int(*n as i64)),
                    ("lambda", partition_json(&lam)),
                    ("mu", partition_json(&m)),
                    (
                        "terms",
                        J::Arr(
                            terms
                                .into_iter()
                                .map(|(d, nu, c)| {
                                    J::obj(vec![
                                        ("nu", partition_json(&nu)),
                                        ("d", J::Int(d as i64)),
                                        ("coeff", J::Int(c)),
                                    ])
                                })
                                .collect(),
                        ),
                    ),
                ]))
            };
            match run() {
                Ok(value) => {
                    if emit(&cli.out, &value).is_err() {
                        return ExitCode::from(1);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Gw {
            k,
            n,
            lambda,
            mu,
            nu,
            d,
        } => {
            let run = || -> symcap::Result<J> {
                let spec = GrassSpec::new(*k, *n)?;
                let lam = Partition::parse(lambda)?;
                let m = Partition::parse(mu)?;
                let nn = Partition::parse(nu)?;
                let value = gw_invariant(spec, &lam, &m, &nn, *d)?;
                Ok(J::obj(vec![
                    ("k", J::Int(*k as i64)),
                    ("n", J::Int(*n as i64)),
                    ("lambda", partition_json(&lam)),
                    ("mu", partition_json(&m)),
                    ("nu", partition_json(&nn)),
                    ("d", J::Int(*d as i64)),
                    ("value", J::Int(value)),
                ]))
            };
            match run() {
                Ok(value) => {
                    if emit(&cli.out, &value).is_err() {
                        return ExitCode::from(1);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Verify {
            suite,
            samples,
            seed,
            tol,
        } => match run_suite(suite, *samples, *seed, *tol) {
            Ok(reports) => {
                let pass = reports.iter().all(|r| r.pass);
                let value = J::obj(vec![
                    (
                        "reports",
                        J::Arr(reports.iter().map(|r| r.to_json()).collect()),
                    ),
                    ("pass", J::Bool(pass)),
                ]);
                if emit(&cli.out, &value).is_err() {
                    return ExitCode::from(1);
                }
                if pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => usage_error(e),
        },
    }
}

fn main() -> ExitCode {
    run()
}
