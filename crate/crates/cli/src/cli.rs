//! Argument parsing and subcommand dispatch.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage or
//! argument error.

use std::ffi::OsString;
use std::io::Write;

use anyon_deg_core::lattice::{Lattice, Vertex};
use anyon_deg_core::pathcount::{count_paths, table_row};
use anyon_deg_core::spectral::{self, lambda_perron, lambda_trig, smallest_positive_root};
use anyon_deg_core::syt::{self, Shape3};
use anyon_deg_core::{solve_system, system_det};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{
    parse_shape, parse_vertex, table_columns, table_csv, AuditJson, GenFnJson, LatticeJson,
    PolyJson, SolutionJson, SpectralJson, TableJson,
};
use crate::{parallel, reproduce};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Internal tolerance of power iteration and bisection.
const INTERNAL_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "anyon-deg", version, about = "SU(3)_k degeneracies by path counting on D_k")]
pub struct Cli {
    #[command(flatten)]
    caps: Caps,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Caps {
    /// Largest step count any subcommand will accept.
    #[arg(long, global = true, default_value_t = 10_000)]
    cap_n: u32,
    /// Largest level any subcommand will accept.
    #[arg(long, global = true, default_value_t = 64)]
    cap_k: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Trig,
    Eig,
    Root,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of n-step walks from (0,0) to a vertex.
    Count {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_vertex, default_value = "0,0")]
        vertex: Vertex,
    },
    /// Grid of walk counts over levels and step counts.
    Table {
        #[arg(long)]
        max_k: u32,
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_parser = parse_vertex, default_value = "0,0")]
        vertex: Vertex,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Show every step count, not only the residue class that can be nonzero.
        #[arg(long)]
        all_columns: bool,
    },
    /// Generating functions F_{i,j}(t;k) as reduced num/den.
    Genfunc {
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = parse_vertex)]
        vertex: Option<Vertex>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Determinant of the system matrix F_k.
    Det {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Total quantum dimension.
    Qdim {
        #[arg(long)]
        k: u32,
        /// Rank of SU(N); only the trigonometric method supports N != 3.
        #[arg(long = "N", default_value_t = 3)]
        rank: u32,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Cross-method agreement tolerance.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Standard Young tableau counts (unrestricted level).
    Syt {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_parser = parse_vertex, conflicts_with = "shape")]
        vertex: Option<Vertex>,
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Shape3>,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
        /// Audit the printed closed form against the hook-length count for every n' <= n.
        #[arg(long)]
        paper_formula: bool,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Series coefficients of every F_{i,j}(t;k) against walk counts up to n.
    Verify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// The graph D_k as JSON.
    Lattice {
        #[arg(long)]
        k: u32,
    },
    /// Run the full regression of published values; JSON report.
    Reproduce {
        /// Run only the named check (repeatable).
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(reproduce::CHECKS))]
        only: Vec<String>,
        /// Inject a wrong determinant coefficient to exercise the failure path.
        #[arg(long, hide = true)]
        perturb: bool,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<anyon_deg_core::Error> for Failure {
    fn from(e: anyon_deg_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("serialization failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

/// Parse `args` (including the program name) and run, writing results to
/// `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => EXIT_MISMATCH,
        Err(Failure::Usage(msg)) => {
            let usage = <Cli as clap::CommandFactory>::command().render_usage();
            let _ = writeln!(err, "error: {msg}\n\n{usage}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
    }
}

fn check_k(caps: &Caps, k: u32) -> Outcome {
    if k > caps.cap_k {
        return Err(Failure::Usage(format!("k = {k} exceeds --cap-k {}", caps.cap_k)));
    }
    Ok(())
}

fn check_n(caps: &Caps, n: u32) -> Outcome {
    if n > caps.cap_n {
        return Err(Failure::Usage(format!("n = {n} exceeds --cap-n {}", caps.cap_n)));
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let caps = &cli.caps;
    match &cli.command {
        &Command::Count { k, n, vertex } => {
            check_k(caps, k)?;
            check_n(caps, n)?;
            let table = count_paths(k, n)?;
            let count = table.get(vertex).ok_or(anyon_deg_core::Error::VertexOutOfRange { vertex, k })?;
            writeln!(out, "{count}")?;
        }
        &Command::Table {
            max_k,
            max_n,
            vertex,
            format,
            all_columns,
        } => {
            check_k(caps, max_k)?;
            check_n(caps, max_n)?;
            let levels: Vec<u32> = (1..=max_k).collect();
            let rows = parallel::map(&levels, |&k| table_row(k, max_n, vertex).map(|row| (k, row)))
                .into_iter()
                .collect::<anyon_deg_core::Result<Vec<_>>>()?;
            let columns = table_columns(max_n, vertex, all_columns);
            match format {
                TableFormat::Csv => write!(out, "{}", table_csv(&rows, &columns))?,
                TableFormat::Json => {
                    let json = TableJson::new(vertex, &rows, &columns);
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                }
            }
        }
        &Command::Genfunc { k, vertex, format } => {
            check_k(caps, k)?;
            let solution = solve_system(k)?;
            let selected: Vec<_> = match vertex {
                Some(v) => {
                    let f = solution
                        .get(v)
                        .ok_or(anyon_deg_core::Error::VertexOutOfRange { vertex: v, k })?;
                    vec![(v, f)]
                }
                None => solution.iter().collect(),
            };
            match format {
                TextOrJson::Text if vertex.is_some() => writeln!(out, "{}", selected[0].1)?,
                TextOrJson::Text => {
                    for (v, f) in &selected {
                        writeln!(out, "{},{}: {f}", v.i, v.j)?;
                    }
                }
                TextOrJson::Json => {
                    let json = SolutionJson {
                        k,
                        determinant: solution.determinant().into(),
                        functions: selected.iter().map(|(v, f)| GenFnJson::new(*v, f)).collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                }
            }
        }
        &Command::Det { k, format } => {
            check_k(caps, k)?;
            let det = system_det(k)?;
            match format {
                TextOrJson::Text => writeln!(out, "{det}")?,
                TextOrJson::Json => writeln!(out, "{}", serde_json::to_string(&PolyJson::from(&det))?)?,
            }
        }
        &Command::Qdim { k, rank, method, tol } => {
            check_k(caps, k)?;
            if rank < 2 {
                return Err(Failure::Usage("--N must be at least 2".into()));
            }
            if rank != 3 && method != Method::Trig {
                return Err(Failure::Usage("only --method trig supports --N other than 3".into()));
            }
            if tol.is_nan() || tol <= 0.0 {
                return Err(Failure::Usage("--tol must be positive".into()));
            }
            if k == 0 {
                return Err(anyon_deg_core::Error::InvalidLevel(k).into());
            }
            match method {
                Method::Trig => writeln!(out, "{}", lambda_trig(rank, k))?,
                Method::Eig => writeln!(out, "{}", lambda_perron(k, INTERNAL_TOL)?)?,
                Method::Root => {
                    let rho = smallest_positive_root(&system_det(k)?, INTERNAL_TOL)?;
                    writeln!(out, "{}", 1.0 / rho)?
                }
                Method::All => {
                    let report = spectral::spectral_report(k, INTERNAL_TOL)?;
                    let json = SpectralJson::new(&report, tol);
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                    if !json.agrees {
                        return Err(Failure::Mismatch);
                    }
                }
            }
        }
        &Command::Syt {
            n,
            vertex,
            shape,
            oracle,
            paper_formula,
            format,
        } => run_syt(caps, out, n, vertex, shape, oracle, paper_formula, format)?,
        &Command::Verify { k, n } => {
            check_k(caps, k)?;
            check_n(caps, n)?;
            if k == 0 {
                return Err(anyon_deg_core::Error::InvalidLevel(k).into());
            }
            match reproduce::series_range(k, k, n) {
                Ok(detail) => writeln!(out, "ok: k={k} n<={n}: {detail}")?,
                Err(detail) => {
                    writeln!(out, "mismatch: {detail}")?;
                    return Err(Failure::Mismatch);
                }
            }
        }
        &Command::Lattice { k } => {
            check_k(caps, k)?;
            let lattice = Lattice::new(k)?;
            writeln!(out, "{}", serde_json::to_string(&LatticeJson::from(&lattice))?)?;
        }
        Command::Reproduce { only, perturb } => {
            let options = reproduce::Options {
                only: only.clone(),
                perturb: *perturb,
            };
            let report = reproduce::run(&options).map_err(Failure::Usage)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            if !report.passed {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_syt(
    caps: &Caps,
    out: &mut dyn Write,
    n: Option<u32>,
    vertex: Option<Vertex>,
    shape: Option<Shape3>,
    oracle: bool,
    paper_formula: bool,
    format: TextOrJson,
) -> Outcome {
    let n = match (n, shape) {
        (Some(n), Some(s)) if n != s.n() => {
            return Err(Failure::Usage(format!(
                "--n {n} does not match the {} boxes of --shape",
                s.n()
            )))
        }
        (Some(n), _) => n,
        (None, Some(s)) => s.n(),
        (None, None) => return Err(Failure::Usage("syt needs --n or --shape".into())),
    };
    check_n(caps, n)?;
    let target = shape.map(|s| s.endpoint()).or(vertex);

    if paper_formula {
        let entries = syt::audit_printed_formula(n, target);
        let audit = AuditJson::new(n, &entries);
        match format {
            TextOrJson::Json => writeln!(out, "{}", serde_json::to_string_pretty(&audit)?)?,
            TextOrJson::Text => {
                for e in &audit.entries {
                    writeln!(
                        out,
                        "n={} vertex=({},{}) shape=({},{},{}) hook={} printed={} {}",
                        e.n,
                        e.vertex[0],
                        e.vertex[1],
                        e.shape[0],
                        e.shape[1],
                        e.shape[2],
                        e.hook,
                        e.printed,
                        if e.agrees { "agree" } else { "DISAGREE" }
                    )?;
                }
                let s = &audit.summary;
                writeln!(
                    out,
                    "checked={} agreements={} disagreements={} origin_all_agree={}",
                    s.checked, s.agreements, s.disagreements, s.origin_all_agree
                )?;
            }
        }
        return Ok(());
    }

    let vertex = target.unwrap_or(Vertex::ORIGIN);
    let count = syt::unrestricted_count(n, vertex);
    if !oracle {
        writeln!(out, "{count}")?;
        return Ok(());
    }
    let brute = match Shape3::from_endpoint(n, vertex) {
        Some(s) => syt::brute_force_count(&s)?,
        None => Default::default(),
    };
    writeln!(out, "hook={count} brute={brute}")?;
    if brute != count {
        return Err(Failure::Mismatch);
    }
    Ok(())
}
