//! `termspace`: ideal lattices and terminal spaces of finite commutative monoids.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use termspace_core::corpus::{enumerate_commutative_monoids, make_family, FamilySpec};
use termspace_core::io::{export_dot, parse_monoid_file, serialize_monoid, ParseError};
use termspace_core::topology::{SubsetMode, MAX_POINTS};
use termspace_core::verifier::{verify_analysis, VerifyOptions};
use termspace_core::{Analysis, FiniteMonoid, ReportDocument};

/// Exit codes.
const USAGE: u8 = 1;
const INVALID: u8 = 2;
const THEOREM: u8 = 3;

#[derive(Parser)]
#[command(name = "termspace", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest terminal space accepted (at most 20).
    #[arg(long, global = true, default_value_t = MAX_POINTS)]
    max_points: usize,
    /// Sample pairs of point subsets with this seed when a space has more than 12 points.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of sampled pairs per check when `--seed` is given.
    #[arg(long, global = true, default_value_t = 4096)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// JSON.
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate monoid files.
    Validate { files: Vec<PathBuf> },
    /// Ideals and their classification.
    Analyze { file: PathBuf },
    /// Terminal space, closed sets, separation, components, radicals and density.
    Topology { file: PathBuf },
    /// Run the full check suite; exits with 3 if any check fails.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Include per-check elapsed times.
        #[arg(long)]
        timings: bool,
    },
    /// Print a monoid from a named family.
    Generate {
        /// `z_mult`, `cyclic`, `boolean`, `chain_semilattice`, `direct_product`,
        /// or a full expression such as `direct_product(boolean,z_mult(3))`.
        #[arg(long)]
        family: String,
        #[arg(long, num_args = 0.., allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Enumerate commutative monoids of a given order.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// Permit order 6.
        #[arg(long)]
        allow_order_six: bool,
    },
    /// Export the ideal lattice and the specialization order.
    Export {
        /// Monoid file to export as Graphviz DOT.
        #[arg(long, value_name = "FILE")]
        dot: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<String, Failure>;
type Verified = Result<(ReportDocument, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli);
    ExitCode::from(code)
}

fn run(cli: &Cli) -> u8 {
    if cli.max_points > MAX_POINTS {
        eprintln!("error: --max-points may not exceed {MAX_POINTS}");
        return USAGE;
    }
    match &cli.command {
        Command::Validate { files } => {
            let results: Vec<(String, Outcome)> = files
                .iter()
                .map(|f| {
                    let r = load(f).map(|m| format!("ok {} (order {})\n", f.display(), m.order()));
                    (f.display().to_string(), r)
                })
                .collect();
            emit(results)
        }
        Command::Analyze { file } => emit_one(file, analyze(cli, file, false)),
        Command::Topology { file } => emit_one(file, analyze(cli, file, true)),
        Command::Verify { files, timings } => {
            let results: Vec<(String, Verified)> = files
                .par_iter()
                .map(|f| (f.display().to_string(), verify(cli, f, *timings)))
                .collect();
            let mut code = 0;
            let mut docs = Vec::new();
            for (name, r) in results {
                match r {
                    Ok((doc, failed)) => {
                        if failed {
                            code = code.max(THEOREM);
                        }
                        docs.push(doc);
                    }
                    Err(e) => {
                        eprintln!("error: {name}: {}", e.message);
                        code = code.max(e.code);
                    }
                }
            }
            let out = if cli.format == Format::Machine && files.len() > 1 {
                let mut s = serde_json::to_string_pretty(&docs).expect("reports serialize");
                s.push('\n');
                s
            } else {
                let rendered: Vec<String> = docs.iter().map(|d| render(cli, d)).collect();
                rendered.join("\n")
            };
            print(&out);
            code
        }
        Command::Generate { family, params } => {
            let expr = if params.is_empty() {
                family.clone()
            } else {
                format!("{family}({})", params.join(","))
            };
            let r = expr
                .parse::<FamilySpec>()
                .and_then(|spec| make_family(&spec))
                .map(|m| serialize_monoid(&m))
                .map_err(|e| Failure::new(USAGE, e.to_string()));
            emit_one(Path::new("generate"), r)
        }
        Command::Census {
            order,
            up_to_iso,
            allow_order_six,
        } => {
            if *allow_order_six && *order == 6 {
                eprintln!("warning: order 6 census enumerates tens of thousands of tables");
            }
            let r = enumerate_commutative_monoids(*order, *up_to_iso, *allow_order_six)
                .map(|ms| census_output(cli.format, *order, *up_to_iso, &ms))
                .map_err(|e| Failure::new(USAGE, e.to_string()));
            emit_one(Path::new("census"), r)
        }
        Command::Export { dot } => {
            let r = load(dot).and_then(|m| {
                Analysis::new(m, cli.max_points)
                    .map(|a| export_dot(&a))
                    .map_err(|e| Failure::new(INVALID, e.to_string()))
            });
            emit_one(dot, r)
        }
    }
}

fn print(s: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(s.as_bytes());
    let _ = stdout.flush();
}

fn emit_one(file: &Path, r: Outcome) -> u8 {
    emit(vec![(file.display().to_string(), r)])
}

/// Prints results in input order; the exit code is the largest failure code.
fn emit(results: Vec<(String, Outcome)>) -> u8 {
    let mut code = 0;
    for (name, r) in results {
        match r {
            Ok(s) => print(&s),
            Err(e) => {
                eprintln!("error: {name}: {}", e.message);
                code = code.max(e.code);
            }
        }
    }
    code
}

fn load(path: &Path) -> Result<FiniteMonoid, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(USAGE, e.to_string()))?;
    parse_monoid_file(&text).map_err(|e| match e {
        ParseError::Invalid(_) => Failure::new(INVALID, e.to_string()),
        _ => Failure::new(USAGE, e.to_string()),
    })
}

fn name_of(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "monoid".to_string())
}

fn build(cli: &Cli, path: &Path) -> Result<Analysis, Failure> {
    let m = load(path)?;
    Analysis::new(m, cli.max_points).map_err(|e| Failure::new(INVALID, e.to_string()))
}

fn render(cli: &Cli, doc: &ReportDocument) -> String {
    match cli.format {
        Format::Text => doc.to_text(),
        Format::Machine => doc.to_json(),
    }
}

fn analyze(cli: &Cli, path: &Path, topology: bool) -> Outcome {
    let a = build(cli, path)?;
    let mut doc = ReportDocument::lattice_only(&a, &name_of(path));
    if topology {
        doc = doc.with_topology(&a);
    }
    Ok(render(cli, &doc))
}

fn verify(cli: &Cli, path: &Path, timings: bool) -> Verified {
    let a = build(cli, path)?;
    let options = VerifyOptions {
        name: name_of(path),
        max_points: cli.max_points,
        subsets: match cli.seed {
            Some(seed) => SubsetMode::Sampled {
                seed,
                samples: cli.samples,
            },
            None => SubsetMode::Exhaustive,
        },
        timings,
    };
    let report = verify_analysis(&a, &options).map_err(|e| Failure::new(INVALID, e.to_string()))?;
    let failed = report.has_failures();
    let doc = ReportDocument::lattice_only(&a, &options.name)
        .with_topology(&a)
        .with_verification(report);
    Ok((doc, failed))
}

fn census_output(format: Format, order: usize, up_to_iso: bool, ms: &[FiniteMonoid]) -> String {
    match format {
        Format::Text => {
            let mut out = format!(
                "# order {order}, {} monoid(s){}\n",
                ms.len(),
                if up_to_iso { " up to isomorphism" } else { "" }
            );
            for (k, m) in ms.iter().enumerate() {
                out.push_str(&format!("\n# {}\n", k + 1));
                out.push_str(&serialize_monoid(m));
            }
            out
        }
        Format::Machine => {
            let tables: Vec<Vec<&[usize]>> = ms.iter().map(|m| m.rows().collect()).collect();
            let doc = serde_json::json!({
                "order": order,
                "up_to_iso": up_to_iso,
                "count": ms.len(),
                "tables": tables,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("census serializes");
            s.push('\n');
            s
        }
    }
}
