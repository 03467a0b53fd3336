//! Command dispatch. Exit codes: 0 success, 1 invariant violation or failed
//! identity, 2 bad input, 3 oracle budget exceeded.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rwg_core::oracle::{self, OracleBudget, OracleError, Verdict};
use rwg_core::realweyl::{self, RealWeylError};
use rwg_core::weylperm::weyl_group;
use rwg_core::{CartanType, InvolutionDatum, LatticeMode, RootSystem};
use serde::Serialize;

use crate::catalog;
use crate::descriptor::{Descriptor, DescriptorError};
use crate::report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVARIANT: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "rwg", version, about = "Real Weyl groups from root data, involutions and gradings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeArg {
    Weight,
    Root,
}

impl From<LatticeArg> for LatticeMode {
    fn from(l: LatticeArg) -> Self {
        match l {
            LatticeArg::Weight => LatticeMode::Weight,
            LatticeArg::Root => LatticeMode::Root,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the real Weyl group of a descriptor file or `catalog:<id>`.
    Analyze {
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Overrides the descriptor's lattice.
        #[arg(long, value_enum)]
        lattice: Option<LatticeArg>,
        /// Skip the group-theoretic re-checks of the result.
        #[arg(long)]
        no_check: bool,
    },
    /// List the built-in data or print one as a descriptor.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check every identity by brute force, on one datum or a fuzz campaign.
    Oracle {
        /// Descriptor file or `catalog:<id>`; omit with --fuzz.
        target: Option<String>,
        /// Number of random data, spread over the types of the given rank.
        #[arg(long, conflicts_with = "target")]
        fuzz: Option<usize>,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 200_000)]
        max_order: u128,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, value_enum)]
        lattice: Option<LatticeArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the root table of a type.
    Roots {
        #[arg(long = "type")]
        ctype: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Show { id: String },
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    identity: Option<&'a str>,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit_error(format: Format, kind: &str, identity: Option<&str>, message: String) {
    match format {
        Format::Json => {
            let body = ErrorReport { error: ErrorBody { kind, message, identity } };
            out(&(serde_json::to_string_pretty(&body).expect("error serializes") + "\n"));
        }
        Format::Text => eprintln!("error [{kind}]: {message}"),
    }
}

fn load_target(target: &str) -> Result<Descriptor, DescriptorError> {
    match target.strip_prefix("catalog:") {
        Some(id) => catalog::lookup(id)
            .map(|e| e.descriptor)
            .ok_or_else(|| DescriptorError::Malformed(format!("unknown catalog id {id:?}"))),
        None => Descriptor::load(target),
    }
}

fn pipeline_error(format: Format, e: &RealWeylError) -> ExitCode {
    match e {
        RealWeylError::Invalid(inner) => {
            emit_error(format, inner.kind(), None, inner.to_string());
            ExitCode::from(EXIT_INPUT)
        }
        RealWeylError::Lattice(inner) => {
            emit_error(format, "Lattice", None, inner.to_string());
            ExitCode::from(EXIT_INVARIANT)
        }
        RealWeylError::Invariant { identity, detail } => {
            emit_error(format, "InvariantViolation", Some(identity), detail.clone());
            ExitCode::from(EXIT_INVARIANT)
        }
    }
}

/// Runs the pipeline on a descriptor and renders the report.
pub fn analyze_descriptor(d: &Descriptor, lattice: Option<LatticeMode>, check: bool, format: Format) -> Result<String, AnalyzeError> {
    let mode = match lattice {
        Some(m) => m,
        None => d.lattice_mode()?,
    };
    let datum = d.to_datum()?;
    let dec = realweyl::compute(&datum, mode)?;
    if check {
        realweyl::check_structure(&datum.rs, &dec)?;
    }
    let report = Report::new(&datum.rs, &dec);
    Ok(match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    })
}

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error(transparent)]
    Pipeline(#[from] RealWeylError),
}

fn cmd_analyze(target: &str, format: Format, lattice: Option<LatticeArg>, check: bool) -> ExitCode {
    let d = match load_target(target) {
        Ok(d) => d,
        Err(e) => {
            emit_error(format, e.kind(), None, e.to_string());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match analyze_descriptor(&d, lattice.map(Into::into), check, format) {
        Ok(text) => {
            out(&text);
            if format == Format::Json {
                out("\n");
            }
            ExitCode::from(EXIT_OK)
        }
        Err(AnalyzeError::Descriptor(e)) => {
            emit_error(format, e.kind(), None, e.to_string());
            ExitCode::from(EXIT_INPUT)
        }
        Err(AnalyzeError::Pipeline(e)) => pipeline_error(format, &e),
    }
}

fn cmd_catalog(action: CatalogAction) -> ExitCode {
    match action {
        CatalogAction::List => {
            let mut text = String::new();
            for e in catalog::entries() {
                text += &format!("{:<24} {}\n", e.id, e.summary);
            }
            out(&text);
            ExitCode::from(EXIT_OK)
        }
        CatalogAction::Show { id } => match catalog::lookup(&id) {
            Some(e) => {
                out(&(e.descriptor.to_json() + "\n"));
                ExitCode::from(EXIT_OK)
            }
            None => {
                eprintln!("error [UnknownId]: no catalog entry {id:?}");
                ExitCode::from(EXIT_INPUT)
            }
        },
    }
}

#[derive(Serialize)]
struct VerdictOut<'a> {
    identity: &'a str,
    passed: bool,
    #[serde(skip_serializing_if = "str::is_empty")]
    detail: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct DatumOut<'a> {
    label: String,
    verdicts: Vec<VerdictOut<'a>>,
}

#[derive(Serialize)]
struct CampaignOut<'a> {
    data: Vec<DatumOut<'a>>,
    checks_passed: usize,
    checks_failed: usize,
    data_failed: usize,
}

fn render_campaign(format: Format, results: &[(String, Vec<Verdict>)]) -> (String, bool) {
    let mut passed = 0;
    let mut failed = 0;
    let mut data_failed = 0;
    let mut data = Vec::new();
    for (label, verdicts) in results {
        let bad = verdicts.iter().filter(|v| !v.passed).count();
        passed += verdicts.len() - bad;
        failed += bad;
        data_failed += (bad > 0) as usize;
        data.push(DatumOut {
            label: label.clone(),
            verdicts: verdicts
                .iter()
                .map(|v| VerdictOut {
                    identity: v.identity,
                    passed: v.passed,
                    detail: &v.detail,
                    witness: v.witness.as_ref().map(|w| w.cycle_string()),
                })
                .collect(),
        });
    }
    let out = match format {
        Format::Json => {
            let c = CampaignOut { data, checks_passed: passed, checks_failed: failed, data_failed };
            serde_json::to_string_pretty(&c).expect("campaign serializes") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for d in &data {
                for v in &d.verdicts {
                    if !v.passed {
                        s += &format!("FAIL {} [{}] {} {}\n", d.label, v.identity, v.detail, v.witness.as_deref().unwrap_or(""));
                    }
                }
            }
            let n = results.len();
            s += &format!("{}/{} data pass ({} checks passed, {} failed)\n", n - data_failed, n, passed, failed);
            s
        }
    };
    (out, failed == 0)
}

fn oracle_error(format: Format, e: &OracleError) -> ExitCode {
    match e {
        OracleError::BudgetExceeded { .. } => {
            emit_error(format, "BudgetExceeded", None, e.to_string());
            ExitCode::from(EXIT_BUDGET)
        }
        OracleError::Pipeline(p) => pipeline_error(format, p),
    }
}

/// Fuzzed data for a campaign over the types of `rank` admitted by `budget`,
/// round-robin, `count` in total.
pub fn fuzz_data(rank: usize, count: usize, seed: u64, budget: &OracleBudget) -> Result<Vec<(String, InvolutionDatum)>, OracleError> {
    let types: Vec<CartanType> = CartanType::all_up_to(rank)
        .into_iter()
        .filter(|t| t.rank == rank && t.weyl_order() <= budget.max_group_order)
        .collect();
    if rank > budget.max_rank || types.is_empty() {
        let order = CartanType::all_up_to(rank).iter().filter(|t| t.rank == rank).map(|t| t.weyl_order()).min().unwrap_or(0);
        return Err(OracleError::BudgetExceeded { rank, order });
    }
    let systems: Vec<(Arc<RootSystem>, _)> = types
        .iter()
        .map(|&t| {
            let rs = Arc::new(RootSystem::new(t));
            let w = weyl_group(&rs);
            (rs, w)
        })
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|k| {
            let (rs, w) = &systems[k % systems.len()];
            (format!("fuzz#{k}:{}", rs.cartan_type()), oracle::random_datum(rs, w, &mut rng))
        })
        .collect())
}

/// Runs every check on each datum, spread over the available cores. Results
/// keep the input order; the first error in input order wins.
pub fn check_campaign(
    data: &[(String, InvolutionDatum, LatticeMode)],
    budget: &OracleBudget,
) -> Result<Vec<(String, Vec<Verdict>)>, OracleError> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(data.len().max(1));
    let chunk = data.len().div_ceil(workers).max(1);
    let parts: Vec<Vec<Result<Vec<Verdict>, OracleError>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = data
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|(_, d, mode)| oracle::check_all(d, *mode, budget)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("oracle worker panicked")).collect()
    });
    data.iter()
        .zip(parts.into_iter().flatten())
        .map(|((label, _, _), r)| r.map(|v| (label.clone(), v)))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_oracle(
    target: Option<String>,
    fuzz: Option<usize>,
    rank: usize,
    max_order: u128,
    max_rank: usize,
    seed: u64,
    lattice: Option<LatticeArg>,
    format: Format,
) -> ExitCode {
    let budget = OracleBudget { max_group_order: max_order, max_rank };
    let mut data: Vec<(String, InvolutionDatum, LatticeMode)> = Vec::new();
    match (target, fuzz) {
        (Some(t), _) => {
            let d = match load_target(&t) {
                Ok(d) => d,
                Err(e) => {
                    emit_error(format, e.kind(), None, e.to_string());
                    return ExitCode::from(EXIT_INPUT);
                }
            };
            let mode = lattice.map(Into::into).map_or_else(|| d.lattice_mode(), Ok);
            match (d.to_datum(), mode) {
                (Ok(datum), Ok(mode)) => data.push((t, datum, mode)),
                (Err(e), _) | (_, Err(e)) => {
                    emit_error(format, e.kind(), None, e.to_string());
                    return ExitCode::from(EXIT_INPUT);
                }
            }
        }
        (None, Some(n)) => {
            let mode = lattice.map(Into::into).unwrap_or_default();
            match fuzz_data(rank, n, seed, &budget) {
                Ok(v) => data.extend(v.into_iter().map(|(l, d)| (l, d, mode))),
                Err(e) => return oracle_error(format, &e),
            }
        }
        (None, None) => {
            emit_error(format, "Usage", None, "give a target or --fuzz N".into());
            return ExitCode::from(EXIT_INPUT);
        }
    }
    let results = match check_campaign(&data, &budget) {
        Ok(r) => r,
        Err(e) => return oracle_error(format, &e),
    };
    let (text, ok) = render_campaign(format, &results);
    out(&text);
    ExitCode::from(if ok { EXIT_OK } else { EXIT_INVARIANT })
}

#[derive(Serialize)]
struct RootRow {
    index: usize,
    root: Vec<i64>,
    height: i64,
    norm: i64,
}

fn cmd_roots(ctype: &str, format: Format) -> ExitCode {
    let t: CartanType = match ctype.parse() {
        Ok(t) => t,
        Err(e) => {
            emit_error(format, "InvalidType", None, format!("{e}"));
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let rs = RootSystem::new(t);
    let rows: Vec<RootRow> = (0..rs.num_roots())
        .map(|i| RootRow { index: i, root: rs.root(i).to_vec(), height: rs.root(i).iter().sum(), norm: rs.norm(i) })
        .collect();
    match format {
        Format::Json => out(&(serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n")),
        Format::Text => {
            let mut text = format!("{:>5}  {:>7}  {:>5}  root\n", "index", "height", "norm");
            for r in rows {
                text += &format!("{:>5}  {:>7}  {:>5}  {:?}\n", r.index, r.height, r.norm, r.root);
            }
            out(&text);
        }
    }
    ExitCode::from(EXIT_OK)
}

pub fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Analyze { target, format, lattice, no_check } => cmd_analyze(&target, format, lattice, !no_check),
        Command::Catalog { action } => cmd_catalog(action),
        Command::Oracle { target, fuzz, rank, max_order, max_rank, seed, lattice, format } => {
            cmd_oracle(target, fuzz, rank, max_order, max_rank, seed, lattice, format)
        }
        Command::Roots { ctype, format } => cmd_roots(&ctype, format),
    }
}
