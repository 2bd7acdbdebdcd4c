//! The `saxl` command-line surface: one subcommand per pipeline stage, JSON
//! by default, human-readable tables behind `--format text`. All documents go
//! to one output stream and are byte-deterministic for fixed arguments;
//! diagnostics (including per-partition timings) go to the error stream.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::certify::{
    certify_comparable, verify, verify_hooks_all, verify_theorem_all, Certificate,
    CertificateDocument, SweepReport, CERTIFICATE_SCHEMA_VERSION,
};
use crate::contraction::{
    symmetrized_contraction_bruteforce_with_cap, symmetrized_contraction_fast,
};
use crate::hypergraph::{staircase_hypergraph, TriangularGrid, YoungHypergraph};
use crate::oracle::CharacterCache;
use crate::partition::Partition;
use crate::tableaux::gale_ryser_filling;
use crate::{Error, Filling};

/// Environment fallback for `--jobs`.
pub const JOBS_ENV_VAR: &str = "SAXL_JOBS";

#[derive(serde::Serialize)]
struct FillingDocument<'a> {
    shape: &'a Partition,
    content: &'a Partition,
    exists: bool,
    filling: Option<Filling>,
}

#[derive(serde::Serialize)]
struct ValueDocument {
    value: String,
}

#[derive(serde::Serialize)]
struct DecomposeDocument<'a> {
    rho: &'a Partition,
    multiplicities: std::collections::BTreeMap<String, u64>,
}

#[derive(serde::Serialize)]
struct VerdictDocument {
    ok: bool,
    failures: Vec<String>,
}

#[derive(Parser)]
#[command(
    name = "saxl",
    version,
    about = "Constructive positivity certificates for Kronecker coefficients of staircase tensor squares",
    propagate_version = true
)]
struct Cli {
    /// Output format for the emitted document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for sweeps (default: one per CPU; SAXL_JOBS as fallback).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the document to a file instead of the output stream.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a semistandard filling of a shape with a given content.
    Filling {
        /// Target shape, e.g. "5,3,1,1".
        #[arg(long)]
        shape: Partition,
        /// Content partition, e.g. "4,3,2,1".
        #[arg(long)]
        content: Partition,
    },
    /// Build the hypergraph of type (staircase, staircase, nu) on the grid.
    Hypergraph {
        /// Staircase index n.
        #[arg(long)]
        n: u32,
        /// Partition of n(n+1)/2 boxes dominating the staircase.
        #[arg(long)]
        nu: Partition,
    },
    /// Evaluate the exact symmetrized contraction for (staircase, staircase, nu).
    Contract {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        nu: Partition,
        /// Sum over all labelings instead of the single surviving term.
        #[arg(long)]
        brute: bool,
        /// Cap on n for --brute.
        #[arg(long, default_value_t = crate::contraction::BRUTE_FORCE_STAIRCASE_CAP)]
        max_brute_n: u32,
    },
    /// Kronecker coefficient of three partitions via the character oracle.
    Kron {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        /// Cap on the box count accepted by the oracle.
        #[arg(long, default_value_t = crate::oracle::DEFAULT_ORACLE_CAP)]
        oracle_cap: u64,
    },
    /// Multiplicity of every irreducible inside the tensor square of rho.
    Decompose {
        #[arg(long)]
        rho: Partition,
        #[arg(long, default_value_t = crate::oracle::DEFAULT_ORACLE_CAP)]
        oracle_cap: u64,
    },
    /// Produce a positivity certificate for nu comparable to the staircase.
    Certify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        nu: Partition,
    },
    /// Replay a certificate document (from a file or the input stream).
    Verify {
        /// Certificate JSON; reads the input stream when omitted.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = crate::oracle::DEFAULT_ORACLE_CAP)]
        oracle_cap: u64,
    },
    /// Certify and verify every hook partition of n(n+1)/2 boxes.
    Hooks {
        #[arg(long)]
        n: u32,
    },
    /// Certify, verify and oracle-check every comparable partition.
    VerifyTheorem {
        #[arg(long)]
        n: u32,
    },
}

/// Parses `argv`, dispatches, and returns the process exit code: 0 on
/// success, 1 on domain errors, 2 on usage errors.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };

    let jobs = cli.jobs.or_else(|| {
        std::env::var(JOBS_ENV_VAR)
            .ok()
            .and_then(|raw| raw.parse().ok())
    });
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(err) => {
            eprintln!("saxl: cannot build worker pool: {err}");
            return 1;
        }
    };

    let outcome = pool.install(|| dispatch(&cli.command, cli.format));
    match outcome {
        Ok((document, code)) => {
            if let Some(path) = &cli.output {
                if let Err(err) = std::fs::write(path, document + "\n") {
                    eprintln!("saxl: cannot write {}: {err}", path.display());
                    return 1;
                }
            } else {
                println!("{document}");
            }
            code
        }
        Err(err) => {
            eprintln!("saxl: {err}");
            1
        }
    }
}

fn dispatch(command: &Command, format: Format) -> crate::Result<(String, i32)> {
    match command {
        Command::Filling { shape, content } => {
            let filling = gale_ryser_filling(shape, content)?;
            let document = match format {
                Format::Json => serde_json::to_string(&FillingDocument {
                    shape,
                    content,
                    exists: filling.is_some(),
                    filling,
                })
                .expect("serializable"),
                Format::Text => match &filling {
                    Some(f) => render_filling(f),
                    None => format!("no filling: {shape} does not dominate {content}"),
                },
            };
            Ok((document, 0))
        }
        Command::Hypergraph { n, nu } => {
            let h = staircase_hypergraph(*n, nu)?;
            let document = match format {
                Format::Json => serde_json::to_string(&h).expect("serializable"),
                Format::Text => render_hypergraph(*n, &h),
            };
            Ok((document, 0))
        }
        Command::Contract {
            n,
            nu,
            brute,
            max_brute_n,
        } => {
            let value = if *brute {
                symmetrized_contraction_bruteforce_with_cap(*n, nu, *max_brute_n)?
            } else {
                symmetrized_contraction_fast(*n, nu)?
            };
            Ok((render_value(&value, format), 0))
        }
        Command::Kron {
            lambda,
            mu,
            nu,
            oracle_cap,
        } => {
            let oracle = CharacterCache::new();
            let value = oracle.kronecker_with_cap(lambda, mu, nu, *oracle_cap)?;
            Ok((render_value(&value, format), 0))
        }
        Command::Decompose { rho, oracle_cap } => {
            let oracle = CharacterCache::new();
            let table = oracle.tensor_square_decomposition_with_cap(rho, *oracle_cap)?;
            let document = match format {
                Format::Json => {
                    let multiplicities: std::collections::BTreeMap<String, u64> = table
                        .iter()
                        .map(|(nu, value)| {
                            let value = value.to_string().parse::<u64>().map_err(|_| {
                                Error::InternalInconsistency(format!(
                                    "multiplicity of {nu} does not fit the report"
                                ))
                            })?;
                            Ok((nu.to_string(), value))
                        })
                        .collect::<crate::Result<_>>()?;
                    serde_json::to_string(&DecomposeDocument {
                        rho,
                        multiplicities,
                    })
                    .expect("serializable")
                }
                Format::Text => {
                    let mut lines: Vec<String> = table
                        .iter()
                        .map(|(nu, value)| format!("{nu}\t{value}"))
                        .collect();
                    lines.sort();
                    lines.join("\n")
                }
            };
            Ok((document, 0))
        }
        Command::Certify { n, nu } => {
            let cert = certify_comparable(*n, nu)?;
            let document = match format {
                Format::Json => {
                    serde_json::to_string(&CertificateDocument::new(cert)).expect("serializable")
                }
                Format::Text => render_certificate(&cert, 0),
            };
            Ok((document, 0))
        }
        Command::Verify { file, oracle_cap } => {
            let raw = match file {
                Some(path) => std::fs::read_to_string(path).map_err(|err| {
                    Error::BadShape(format!("cannot read {}: {err}", path.display()))
                })?,
                None => {
                    let mut buffer = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buffer)
                        .map_err(|err| Error::BadShape(format!("cannot read input: {err}")))?;
                    buffer
                }
            };
            let doc: CertificateDocument = serde_json::from_str(&raw)
                .map_err(|err| Error::BadShape(format!("cannot parse certificate: {err}")))?;
            if doc.schema != CERTIFICATE_SCHEMA_VERSION {
                return Err(Error::BadShape(format!(
                    "unsupported certificate schema {}",
                    doc.schema
                )));
            }
            let oracle = CharacterCache::new();
            let verdict = verify(&doc.certificate, &oracle, *oracle_cap);
            let code = if verdict.is_ok() { 0 } else { 1 };
            let document = match format {
                Format::Json => serde_json::to_string(&VerdictDocument {
                    ok: verdict.is_ok(),
                    failures: verdict.failures.clone(),
                })
                .expect("serializable"),
                Format::Text => {
                    if verdict.is_ok() {
                        "ok".to_string()
                    } else {
                        verdict.failures.join("\n")
                    }
                }
            };
            Ok((document, code))
        }
        Command::Hooks { n } => {
            let oracle = CharacterCache::new();
            let report = verify_hooks_all(*n, &oracle)?;
            Ok((render_report(&report, format), 0))
        }
        Command::VerifyTheorem { n } => {
            let oracle = CharacterCache::new();
            let report = verify_theorem_all(*n, &oracle)?;
            Ok((render_report(&report, format), 0))
        }
    }
}

fn render_value(value: &crate::ExactScalar, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&ValueDocument {
            value: value.to_string(),
        })
        .expect("serializable"),
        Format::Text => value.to_string(),
    }
}

fn render_filling(filling: &Filling) -> String {
    filling
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_hypergraph(n: u32, h: &YoungHypergraph) -> String {
    let grid = TriangularGrid::new(n);
    let mut lines = Vec::new();
    let [lambda, mu, nu] = h.type_triple();
    lines.push(format!(
        "type ({lambda} | {mu} | {nu}) on {} vertices",
        h.vertex_count()
    ));
    lines.push("levels:".to_string());
    for row in 1..=n {
        let row_levels: Vec<String> = grid
            .vertices()
            .iter()
            .filter(|v| v.row == row)
            .map(|v| v.level.to_string())
            .collect();
        lines.push(format!("  {}", row_levels.join(" ")));
    }
    for (i, name) in ["layer 1 (rows)", "layer 2 (columns)", "layer 3"]
        .iter()
        .enumerate()
    {
        let edges: Vec<String> = h
            .layer(i)
            .iter()
            .map(|edge| {
                let ids: Vec<String> = edge.iter().map(|id| id.to_string()).collect();
                format!("{{{}}}", ids.join(","))
            })
            .collect();
        lines.push(format!("{name}: {}", edges.join(" ")));
    }
    lines.join("\n")
}

fn render_certificate(cert: &Certificate, depth: usize) -> String {
    let indent = "  ".repeat(depth);
    let (lambda, mu, nu) = cert.triple();
    match cert {
        Certificate::Constructive { scalar, .. } => {
            format!("{indent}constructive ({lambda} | {mu} | {nu}) scalar {scalar}")
        }
        Certificate::Transposed { inner } => format!(
            "{indent}transposed ({lambda} | {mu} | {nu})\n{}",
            render_certificate(inner, depth + 1)
        ),
        Certificate::Semigroup { left, right, .. } => format!(
            "{indent}semigroup ({lambda} | {mu} | {nu})\n{}\n{}",
            render_certificate(left, depth + 1),
            render_certificate(right, depth + 1)
        ),
        Certificate::OracleLeaf { value, .. } => {
            format!("{indent}oracle ({lambda} | {mu} | {nu}) value {value}")
        }
    }
}

fn render_report(report: &SweepReport, format: Format) -> String {
    for (nu, micros) in &report.timings {
        eprintln!("# {nu} {micros}us");
    }
    match format {
        Format::Json => serde_json::to_string(report).expect("serializable"),
        Format::Text => {
            let mut out = format!(
                "n={} total={} comparable={} certified={} failures={}",
                report.n,
                report.total,
                report.comparable,
                report.certified,
                report.failures.len()
            );
            for failure in &report.failures {
                out.push('\n');
                out.push_str(failure);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn value_rendering_is_plain_decimal() {
        let value = crate::ExactScalar::from(-288);
        assert_eq!(render_value(&value, Format::Json), "{\"value\":\"-288\"}");
        assert_eq!(render_value(&value, Format::Text), "-288");
    }

    #[test]
    fn certificate_tree_rendering() {
        let cert =
            crate::certify::certify_hook(3, &Partition::new(vec![4, 1, 1]).unwrap()).unwrap();
        let text = render_certificate(&cert, 0);
        assert_eq!(
            text,
            "semigroup (3,2,1 | 3,2,1 | 4,1,1)\n  \
             transposed (2,1 | 2,1 | 1,1,1)\n    \
             constructive (2,1 | 2,1 | 3) scalar 2\n  \
             oracle (1,1,1 | 1,1,1 | 3) value 1"
        );
    }
}
