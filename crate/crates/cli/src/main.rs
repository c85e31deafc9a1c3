//! `heis` - exact products of Schur functions on the command line: ordinary,
//! Kronecker, and Heisenberg products, stable coefficients, measured
//! stabilization onsets, stable-family tables, and a fixture verifier.

mod cachefile;
mod fixtures;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use heis_core::heisenberg::{heisenberg_component, heisenberg_product};
use heis_core::jacobi_trudi::recover_aguiar;
use heis_core::kronecker::kronecker_product;
use heis_core::lr::{schur_product, SchurExpansion};
use heis_core::partitions::{IntSequence, Partition};
use heis_core::stability::{
    coefficient_onset, family_coefficient, recovery_bound, stabilization_bound,
    stabilization_onset, stable_aguiar, stable_component, ReducedTriple,
};

use output::{Component, Extra, OutputRecord, Payload, TableData, TableRow, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "heis",
    version,
    about = "Exact Schur-function products and their stable behaviour",
    max_term_width = 100
)]
struct Cli {
    /// Output format (csv is available for `table` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Coefficient cache file: loaded at start, rewritten at exit
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ordinary product of two Schur functions
    Product {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Kronecker product of two Schur functions of the same degree
    Kronecker {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Heisenberg product: all graded components, or one with --degree
    Heisenberg {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Stable coefficient for extended reduced data (tails must be partitions)
    Stable {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Recover an exact coefficient from stable ones (needs |nu| >= |lambda| >= |mu|)
    Recover {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Measured stabilization onset of a component family, or of one
    /// coefficient family when nu is given
    Onset {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long = "d", allow_negative_numbers = true)]
        d: i64,
        #[arg(long = "h", allow_negative_numbers = true)]
        h: i64,
    },
    /// Stable-family table over a range of n, with onset annotations
    Table {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(long = "d", allow_negative_numbers = true)]
        d: i64,
        #[arg(long = "h", allow_negative_numbers = true)]
        h: i64,
        /// Inclusive range of n, written MIN:MAX
        #[arg(long = "n", allow_hyphen_values = true)]
        range: String,
    },
    /// Replay the fixture corpus and report pass/fail per file
    Verify {
        /// Directory of fixture files
        #[arg(long, default_value = "fixtures")]
        fixtures: PathBuf,
    },
}

fn parse_partition(tag: &str, s: &str) -> Result<Partition, String> {
    s.parse()
        .map_err(|_| format!("{tag} is not a partition: {s:?} (expected forms like 2,1,1 or -)"))
}

fn parse_sequence(tag: &str, s: &str) -> Result<IntSequence, String> {
    s.parse()
        .map_err(|_| format!("{tag} is not an integer sequence: {s:?}"))
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("range must be MIN:MAX, got {s:?}"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// Terms in reverse-lexicographic order of the indexing partition.
fn component_terms(e: &SchurExpansion) -> Vec<Term> {
    let mut terms: Vec<(&Partition, i64)> = e.iter().collect();
    terms.sort_by(|a, b| b.0.cmp(a.0));
    terms
        .into_iter()
        .map(|(p, c)| Term {
            partition: p.to_string(),
            coefficient: c,
        })
        .collect()
}

/// Sorts reduced indices the way the table columns are laid out: by size,
/// then reverse-lexicographically.
fn column_order(keys: impl Iterator<Item = Partition>) -> Vec<Partition> {
    let mut columns: Vec<Partition> = keys.collect();
    columns.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    columns
}

fn run(cli: &Cli) -> Result<Payload, String> {
    match &cli.command {
        Command::Product { lambda, mu } => {
            let lambda = parse_partition("lambda", lambda)?;
            let mu = parse_partition("mu", mu)?;
            let product = schur_product(&lambda, &mu).map_err(|e| e.to_string())?;
            Ok(Payload::Expansion {
                components: vec![Component {
                    degree: product.degree(),
                    terms: component_terms(&product),
                }],
            })
        }
        Command::Kronecker { lambda, mu } => {
            let lambda = parse_partition("lambda", lambda)?;
            let mu = parse_partition("mu", mu)?;
            let product = kronecker_product(&lambda, &mu).map_err(|e| e.to_string())?;
            Ok(Payload::Expansion {
                components: vec![Component {
                    degree: product.degree(),
                    terms: component_terms(&product),
                }],
            })
        }
        Command::Heisenberg { lambda, mu, degree } => {
            let lambda = parse_partition("lambda", lambda)?;
            let mu = parse_partition("mu", mu)?;
            let components = match degree {
                Some(l) => vec![(*heisenberg_component(&lambda, &mu, *l)
                    .map_err(|e| e.to_string())?)
                .clone()],
                None => {
                    let product = heisenberg_product(&lambda, &mu).map_err(|e| e.to_string())?;
                    product.iter().map(|(_, e)| e.clone()).collect()
                }
            };
            let mut rendered: Vec<Component> = components
                .iter()
                .map(|e| Component {
                    degree: e.degree(),
                    terms: component_terms(e),
                })
                .collect();
            rendered.sort_by_key(|c| std::cmp::Reverse(c.degree));
            Ok(Payload::Expansion {
                components: rendered,
            })
        }
        Command::Stable { lambda, mu, nu } => {
            let lambda = parse_sequence("lambda", lambda)?;
            let mu = parse_sequence("mu", mu)?;
            let nu = parse_sequence("nu", nu)?;
            let value = stable_aguiar(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
            let triple =
                ReducedTriple::from_sequences(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
            let mut extras = vec![
                Extra {
                    name: "d".into(),
                    value: triple.d,
                },
                Extra {
                    name: "h".into(),
                    value: triple.h,
                },
            ];
            if t_bound_ok(&triple) {
                let bound = stabilization_bound(&triple.lambda, &triple.mu, triple.d, triple.h)
                    .map_err(|e| e.to_string())?;
                extras.push(Extra {
                    name: "stabilization_bound".into(),
                    value: bound,
                });
            }
            Ok(Payload::Value {
                label: "stable".into(),
                value,
                extras,
            })
        }
        Command::Recover { lambda, mu, nu } => {
            let lambda = parse_partition("lambda", lambda)?;
            let mu = parse_partition("mu", mu)?;
            let nu = parse_partition("nu", nu)?;
            let value = recover_aguiar(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
            let mut extras = Vec::new();
            let limit =
                (4 * i64::from(nu.size()) - i64::from(lambda.size()) - i64::from(mu.size())).max(1);
            let lam_seq = IntSequence::from(&lambda);
            let mu_seq = IntSequence::from(&mu);
            for i in 1..=limit as usize {
                let term =
                    stable_aguiar(&lam_seq, &mu_seq, &nu.dagger(i)).map_err(|e| e.to_string())?;
                if term != 0 {
                    extras.push(Extra {
                        name: format!("term_{i}[{}]", nu.dagger(i)),
                        value: if i % 2 == 1 { term } else { -term },
                    });
                }
            }
            Ok(Payload::Value {
                label: "recover".into(),
                value,
                extras,
            })
        }
        Command::Onset {
            lambda,
            mu,
            nu,
            d,
            h,
        } => {
            let lambda = parse_partition("lambda", lambda)?;
            let mu = parse_partition("mu", mu)?;
            let (label, value) = match nu {
                Some(nu) => {
                    let nu = parse_partition("nu", nu)?;
                    (
                        "coefficient_onset",
                        coefficient_onset(&lambda, &mu, &nu, *d, *h).map_err(|e| e.to_string())?,
                    )
                }
                None => (
                    "stabilization_onset",
                    stabilization_onset(&lambda, &mu, *d, *h).map_err(|e| e.to_string())?,
                ),
            };
            let bound = stabilization_bound(&lambda, &mu, *d, *h).map_err(|e| e.to_string())?;
            Ok(Payload::Value {
                label: label.into(),
                value,
                extras: vec![Extra {
                    name: "stabilization_bound".into(),
                    value: bound,
                }],
            })
        }
        Command::Table {
            lambda,
            mu,
            d,
            h,
            range,
        } => {
            let lambda = parse_partition("lambda", lambda)?;
            let mu = parse_partition("mu", mu)?;
            let (lo, hi) = parse_range(range)?;
            build_table(&lambda, &mu, *d, *h, lo, hi)
        }
        Command::Verify { fixtures } => {
            let files = fixtures::run_directory(fixtures)?;
            let passed = files.iter().all(|f| f.failures.is_empty());
            Ok(Payload::Verify { files, passed })
        }
    }
}

fn t_bound_ok(t: &ReducedTriple) -> bool {
    t.d >= 0 && t.h >= 0
}

fn build_table(
    lambda: &Partition,
    mu: &Partition,
    d: i64,
    h: i64,
    lo: i64,
    hi: i64,
) -> Result<Payload, String> {
    let profile = stable_component(lambda, mu, d, h).map_err(|e| e.to_string())?;
    let columns = column_order(profile.keys().cloned());
    let mut rows = Vec::new();
    for n in lo..=hi {
        let mut cells = Vec::new();
        for nu in &columns {
            let embeds_ok = lambda.embed(n).to_partition().is_some()
                && mu.embed(n - d).to_partition().is_some()
                && nu.embed(n + h).to_partition().is_some();
            if embeds_ok {
                cells.push(Some(
                    family_coefficient(lambda, mu, nu, d, h, n).map_err(|e| e.to_string())?,
                ));
            } else {
                cells.push(None);
            }
        }
        rows.push(TableRow { n, cells });
    }
    let mut stable = Vec::new();
    let mut onset = Vec::new();
    let mut bound = Vec::new();
    for nu in &columns {
        stable.push(profile.get(nu).copied().unwrap_or(0));
        onset.push(coefficient_onset(lambda, mu, nu, d, h).map_err(|e| e.to_string())?);
        bound.push(recovery_bound(lambda, mu, nu, d, h).map_err(|e| e.to_string())?);
    }
    Ok(Payload::Table(TableData {
        columns: columns.iter().map(|c| c.to_string()).collect(),
        rows,
        stable,
        onset,
        bound,
        component_onset: stabilization_onset(lambda, mu, d, h).map_err(|e| e.to_string())?,
        component_bound: stabilization_bound(lambda, mu, d, h).map_err(|e| e.to_string())?,
    }))
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn input_echo(cli: &Cli) -> Vec<(String, String)> {
    let pair = |k: &str, v: &str| (k.to_string(), v.to_string());
    match &cli.command {
        Command::Product { lambda, mu }
        | Command::Kronecker { lambda, mu }
        | Command::Heisenberg { lambda, mu, .. } => {
            vec![pair("lambda", lambda), pair("mu", mu)]
        }
        Command::Stable { lambda, mu, nu } | Command::Recover { lambda, mu, nu } => {
            vec![pair("lambda", lambda), pair("mu", mu), pair("nu", nu)]
        }
        Command::Onset {
            lambda,
            mu,
            nu,
            d,
            h,
        } => {
            let mut v = vec![pair("lambda", lambda), pair("mu", mu)];
            if let Some(nu) = nu {
                v.push(pair("nu", nu));
            }
            v.push(pair("d", &d.to_string()));
            v.push(pair("h", &h.to_string()));
            v
        }
        Command::Table {
            lambda,
            mu,
            d,
            h,
            range,
        } => vec![
            pair("lambda", lambda),
            pair("mu", mu),
            pair("d", &d.to_string()),
            pair("h", &h.to_string()),
            pair("n", range),
        ],
        Command::Verify { fixtures } => {
            vec![pair("fixtures", &fixtures.display().to_string())]
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.format == Format::Csv && !matches!(cli.command, Command::Table { .. }) {
        eprintln!("error: csv output is only available for the table command");
        return ExitCode::FAILURE;
    }

    if let Some(path) = &cli.cache {
        if let Err(message) = cachefile::load(path) {
            eprintln!("error: {message}");
            return ExitCode::FAILURE;
        }
    }

    let started = Instant::now();
    let payload = match run(&cli) {
        Ok(payload) => payload,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::FAILURE;
        }
    };
    let record = OutputRecord {
        command: command_echo(),
        inputs: input_echo(&cli),
        payload,
        elapsed_ms: started.elapsed().as_millis(),
    };

    match cli.format {
        Format::Text => print!("{}", record.render_text()),
        Format::Json => println!("{}", record.render_json()),
        Format::Csv => print!("{}", record.render_csv().expect("table payload")),
    }

    if let Some(path) = &cli.cache {
        if let Err(e) = cachefile::save(path) {
            eprintln!("error: cannot write cache file {}: {e}", path.display());
            return ExitCode::FAILURE;
        }
    }

    if let Payload::Verify { passed: false, .. } = &record.payload {
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
