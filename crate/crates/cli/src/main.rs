//! `symcov` — batch tool for symbolic powers of square-free monomial ideals,
//! basic cover enumeration, exact Betti/depth computations, and the
//! matroid/Cohen-Macaulay verification pipeline.
//!
//! All subcommands print JSON to stdout (or `--out`). Exit codes: 0 for a
//! consistent run, 2 when a verification found an inconsistency, 3 when a
//! capacity or wall-clock budget aborted the computation.

use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use symcov_core::covers::{self, CoverError};
use symcov_core::harness::{self, CorpusSpec, HarnessError};
use symcov_core::homology::{self, CoefficientField, HomologyError};
use symcov_core::ideal::{self, IdealError, MonomialIdeal};
use symcov_core::SimplicialComplex;

#[derive(Parser)]
#[command(name = "symcov", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    /// The Stanley-Reisner ideal of the complex.
    Sr,
    /// The cover ideal of the complex (the default throughout).
    Cover,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial summary of a complex: dimension, f-vector, matroid checks.
    Analyze {
        complex: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the basic k-covers of a complex.
    Covers {
        complex: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Basic-cover counts for k = 1..=kmax.
    Hilbert {
        complex: PathBuf,
        #[arg(long)]
        kmax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimal generators of the m-th symbolic power of the chosen ideal.
    SymbolicPower {
        complex: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "cover")]
        side: Side,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multigraded Betti numbers of an ideal (or of a complex's ideal).
    Betti {
        /// Ideal JSON ({"n", "generators"}) or complex JSON ({"n", "facets"}).
        input: PathBuf,
        #[arg(long, value_enum, default_value = "cover")]
        side: Side,
        /// Symbolic power to take when the input is a complex.
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Depth, projective dimension, and the Cohen-Macaulay verdict.
    Depth {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "cover")]
        side: Side,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full verification pipeline on one complex.
    VerifyTheorem {
        complex: PathBuf,
        #[arg(long, default_value_t = harness::DEFAULT_M_MAX)]
        mmax: u32,
        /// Comma-separated field characteristics, e.g. "0,2".
        #[arg(long, default_value = "0,2")]
        chars: String,
        #[arg(long, default_value_t = harness::DEFAULT_GROWTH_WINDOW.1)]
        kmax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verification pipeline over a whole corpus description.
    RunCorpus {
        corpus: PathBuf,
        #[arg(long)]
        budget_secs: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(exit_code_for(&err));
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        let capacity = cause
            .downcast_ref::<CoverError>()
            .map(|e| matches!(e, CoverError::CapacityExceeded { .. }))
            .or_else(|| {
                cause
                    .downcast_ref::<IdealError>()
                    .map(|e| matches!(e, IdealError::CapacityExceeded { .. }))
            })
            .or_else(|| {
                cause
                    .downcast_ref::<HomologyError>()
                    .map(|e| matches!(e, HomologyError::CapacityExceeded { .. }))
            })
            .or_else(|| {
                cause.downcast_ref::<HarnessError>().map(|e| {
                    matches!(
                        e,
                        HarnessError::BudgetExceeded { .. } | HarnessError::CorpusTooLarge { .. }
                    )
                })
            });
        if capacity == Some(true) {
            return 3;
        }
    }
    1
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Analyze { complex, out } => {
            let cx = load_complex(&complex)?;
            let (face_ring_dim, multiplicity, pure) = cx.multiplicity_and_dim();
            let violation = cx.find_exchange_violation();
            let value = json!({
                "n": cx.n(),
                "facets": cx.facets(),
                "dim": cx.dim(),
                "pure": pure,
                "f_vector": cx.f_vector().counts,
                "face_ring_dim": face_ring_dim,
                "multiplicity": multiplicity,
                "matroid": cx.is_matroid(),
                "symmetric_exchange": cx.check_symmetric_exchange(),
                "exchange_violation": violation,
            });
            emit(&value, out.as_deref())?;
            Ok(0)
        }
        Command::Covers { complex, k, out } => {
            require_positive(k, "k")?;
            let cx = load_complex(&complex)?;
            let covers = covers::enumerate_basic_covers(&cx, k)?;
            emit(&covers, out.as_deref())?;
            Ok(0)
        }
        Command::Hilbert { complex, kmax, out } => {
            require_positive(kmax, "kmax")?;
            let cx = load_complex(&complex)?;
            let profile = covers::hilbert_function(&cx, kmax)?;
            emit(&profile, out.as_deref())?;
            Ok(0)
        }
        Command::SymbolicPower {
            complex,
            m,
            side,
            out,
        } => {
            require_positive(m, "m")?;
            let cx = load_complex(&complex)?;
            let power = symbolic_power(&cx, side, m)?;
            emit(&power, out.as_deref())?;
            Ok(0)
        }
        Command::Betti {
            input,
            side,
            m,
            characteristic,
            out,
        } => {
            require_positive(m, "m")?;
            let (ideal, _) = load_ideal(&input, side, m)?;
            let field = CoefficientField::of_characteristic(characteristic)?;
            let table = homology::betti_numbers(&ideal, field)?;
            emit(&table.to_entry_list(), out.as_deref())?;
            Ok(0)
        }
        Command::Depth {
            input,
            side,
            m,
            characteristic,
            out,
        } => {
            require_positive(m, "m")?;
            let (ideal, label) = load_ideal(&input, side, m)?;
            let field = CoefficientField::of_characteristic(characteristic)?;
            let report = homology::depth_and_cm(&ideal, field, label)?;
            emit(&report, out.as_deref())?;
            Ok(0)
        }
        Command::VerifyTheorem {
            complex,
            mmax,
            chars,
            kmax,
            out,
        } => {
            require_positive(mmax, "mmax")?;
            require_positive(kmax, "kmax")?;
            let cx = load_complex(&complex)?;
            let fields = parse_fields(&chars)?;
            let id = complex
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| "complex".to_string());
            let report = harness::verify_theorem(&cx, &id, mmax, &fields, kmax);
            let consistent = report.theorem_consistent;
            emit(&report, out.as_deref())?;
            Ok(if consistent { 0 } else { 2 })
        }
        Command::RunCorpus {
            corpus,
            budget_secs,
            out,
        } => {
            let text = std::fs::read_to_string(&corpus)
                .with_context(|| format!("reading {}", corpus.display()))?;
            let spec: CorpusSpec = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", corpus.display()))?;
            let base = corpus.parent().unwrap_or(Path::new("."));
            let budget = budget_secs.map(Duration::from_secs);
            let summary = harness::run_corpus(&spec, base, budget)?;
            let ok = summary.all_consistent();
            emit(&summary, out.as_deref())?;
            Ok(if ok { 0 } else { 2 })
        }
    }
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn require_positive(value: u32, flag: &str) -> Result<()> {
    if value == 0 {
        bail!("--{flag} must be at least 1");
    }
    Ok(())
}

/// Minimal primes of the chosen square-free ideal: the facets for the cover
/// ideal, their complements (the dual facets) for the Stanley-Reisner ideal.
fn symbolic_power(cx: &SimplicialComplex, side: Side, m: u32) -> Result<MonomialIdeal> {
    let primes: Vec<Vec<usize>> = match side {
        Side::Cover => cx.facets().to_vec(),
        Side::Sr => cx.dual()?.facets().to_vec(),
    };
    Ok(ideal::symbolic_power_from_primes(&primes, m, cx.n())?)
}

fn load_ideal(path: &Path, side: Side, m: u32) -> Result<(MonomialIdeal, String)> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| path.display().to_string());
    if value.get("facets").is_some() {
        let cx: SimplicialComplex = serde_json::from_value(value)?;
        let ideal = symbolic_power(&cx, side, m)?;
        Ok((ideal, format!("{label}:m{m}")))
    } else if value.get("generators").is_some() {
        if m != 1 {
            bail!("--m applies only to complex input");
        }
        let ideal: MonomialIdeal = serde_json::from_value(value)?;
        Ok((ideal, label))
    } else {
        bail!("{} is neither a complex nor an ideal", path.display());
    }
}

fn parse_fields(spec: &str) -> Result<Vec<CoefficientField>> {
    let mut fields = Vec::new();
    for part in spec.split(',') {
        let p: u32 = part
            .trim()
            .parse()
            .with_context(|| format!("bad characteristic {part}"))?;
        fields.push(CoefficientField::of_characteristic(p)?);
    }
    if fields.is_empty() {
        bail!("at least one characteristic required");
    }
    Ok(fields)
}

fn emit<T: serde::Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}
