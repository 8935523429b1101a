use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gallai_core::certificate::Certificate;
use gallai_core::coloring::Color;
use gallai_core::constructions::{lower_bound_witness, random_gallai};
use gallai_core::decomposition::{gallai_partition, validate_partition};
use gallai_core::formulas::{gr_k_family, gr_value, r2_even_cycle, r_path_cycle, Family, GrInstance, TopKind};
use gallai_core::search::DEFAULT_NODE_BUDGET;
use gallai_core::target::TargetSpec;
use gallai_core::verify::{
    check_bad_coloring, exhaustive_ramsey2, search_bad_gallai, verify_gr_point, Evidence, SearchOptions, Verdict,
    VerdictReport,
};
use gallai_core::Error;

// Writes to stdout, ignoring a closed pipe.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! say_raw {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

/// Exit code for usage, input and internal errors.
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "gallai", version, about = "Gallai colorings: formulas, witnesses, partitions and exact checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Gallai,
    Ramsey,
}

#[derive(clap::Args)]
struct Budgeted {
    /// Search node budget.
    #[arg(long, env = "GALLAI_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl Budgeted {
    fn options(&self) -> SearchOptions {
        SearchOptions { budget: self.budget, threads: self.threads.max(1) }
    }
}

#[derive(clap::Args)]
struct InstanceArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated, non-increasing.
    #[arg(long = "i-vector", value_delimiter = ',', num_args = 1..)]
    i_vector: Vec<usize>,
    #[arg(long, default_value = "cycle")]
    top: TopKind,
}

impl InstanceArgs {
    fn instance(&self) -> Result<GrInstance, Error> {
        GrInstance::new(self.n, self.i_vector.clone(), self.top)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form value.
    ///
    /// --i-vector selects the Gallai-Ramsey value of an instance, --family
    /// with --k a whole family, --m the path-versus-cycle Ramsey number and
    /// --r2 the two-color even cycle Ramsey number.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long = "i-vector", value_delimiter = ',', num_args = 1.., conflicts_with_all = ["family", "m", "r2"])]
        i_vector: Option<Vec<usize>>,
        #[arg(long, default_value = "cycle")]
        top: TopKind,
        #[arg(long, requires = "k", conflicts_with_all = ["m", "r2"])]
        family: Option<Family>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, conflicts_with = "r2")]
        m: Option<usize>,
        #[arg(long)]
        r2: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit a certified lower-bound witness certificate.
    Construct {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Color names, e.g. 1=red,2=blue.
        #[arg(long, value_delimiter = ',')]
        names: Vec<String>,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Re-verify a certificate file.
    Check {
        file: PathBuf,
        #[arg(long, env = "GALLAI_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the Gallai partition and reduced coloring of a certificate.
    Partition {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search for a bad Gallai coloring, or enumerate all 2-colorings.
    Search {
        #[arg(long = "N")]
        vertices: usize,
        /// One target per color, e.g. C10,C10 or P3,C6.
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        targets: Vec<TargetSpec>,
        #[arg(long, value_enum, default_value_t = Mode::Gallai)]
        mode: Mode,
        #[command(flatten)]
        budget: Budgeted,
        /// Write a found witness as a certificate.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify both sides of a Gallai-Ramsey value.
    VerifyPoint {
        #[command(flatten)]
        inst: InstanceArgs,
        #[command(flatten)]
        budget: Budgeted,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit a random Gallai coloring as a certificate.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Color,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn emit_report(report: &VerdictReport, format: Format) -> u8 {
    match format {
        Format::Human => say!("{report}"),
        Format::Json => say!("{}", report.to_json()),
    }
    report.verdict.exit_code() as u8
}

fn read_certificate(path: &Path) -> Result<Certificate, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Certificate::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            say_raw!("{text}");
            Ok(())
        }
    }
}

fn parse_names(names: &[String]) -> Result<Vec<(Color, String)>, String> {
    let mut out = names
        .iter()
        .map(|item| {
            let (c, name) = item.split_once('=').ok_or_else(|| format!("color name {item:?} is not COLOR=NAME"))?;
            let c: Color = c.parse().map_err(|_| format!("bad color in {item:?}"))?;
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(format!("bad name in {item:?}"));
            }
            Ok((c, name.to_string()))
        })
        .collect::<Result<Vec<_>, String>>()?;
    out.sort();
    Ok(out)
}

fn run(command: Command) -> Result<u8, String> {
    let err = |e: Error| e.to_string();
    match command {
        Command::Formula { n, i_vector, top, family, k, m, r2, format } => {
            let (label, value, provenance) = if let Some(iv) = i_vector {
                let inst = GrInstance::new(n, iv, top).map_err(err)?;
                (format!("GR for {inst}"), gr_value(&inst), Some(inst.provenance()))
            } else if let Some(family) = family {
                let k = k.expect("clap enforces --k with --family");
                let v = gr_k_family(n, k, family).map_err(err)?;
                (format!("GR_{k} for the {family:?} family at n={n}"), v.value, Some(v.provenance))
            } else if let Some(m) = m {
                (format!("R(P{m}, C{})", 2 * n), r_path_cycle(m, n).map_err(err)?, None)
            } else if r2 {
                (format!("R(C{0}, C{0})", 2 * n), r2_even_cycle(n).map_err(err)?, None)
            } else {
                return Err("formula needs one of --i-vector, --family with --k, --m or --r2".into());
            };
            match format {
                Format::Human => match provenance {
                    Some(p) => say!("{value}\t{label} ({p})"),
                    None => say!("{value}\t{label}"),
                },
                Format::Json => say!(
                    "{}",
                    json!({"formula": label, "value": value, "provenance": provenance.map(|p| p.to_string())})
                ),
            }
            Ok(0)
        }
        Command::Construct { inst, names, out, format } => {
            let inst = inst.instance().map_err(err)?;
            let names = parse_names(&names)?;
            let witness = lower_bound_witness(&inst).map_err(err)?;
            let report = check_bad_coloring(&witness, &inst.targets()).map_err(err)?;
            let cert = Certificate::bad_coloring(witness, inst.targets(), &report).with_instance(inst).with_names(names);
            Certificate::parse(&cert.serialize()).map_err(|e| format!("certificate does not re-parse: {e}"))?;
            let text = cert.serialize();
            match (&out, format) {
                (Some(path), _) => {
                    write_out(Some(path), &text)?;
                    Ok(emit_report(&report, format))
                }
                (None, Format::Human) => {
                    say_raw!("{text}");
                    Ok(report.verdict.exit_code() as u8)
                }
                (None, Format::Json) => {
                    let mut value = report.to_json();
                    value["certificate"] = json!(text);
                    say!("{value}");
                    Ok(report.verdict.exit_code() as u8)
                }
            }
        }
        Command::Check { file, budget, format } => {
            let cert = read_certificate(&file)?;
            let report = cert.verify(budget).map_err(err)?;
            Ok(emit_report(&report, format))
        }
        Command::Partition { file, format } => {
            let cert = read_certificate(&file)?;
            let g = gallai_partition(&cert.coloring).map_err(err)?;
            let violations = validate_partition(&cert.coloring, &g);
            if !violations.is_empty() {
                let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
                return Err(format!("partition failed validation: {}", list.join("; ")));
            }
            match format {
                Format::Human => {
                    say!("{} parts, colors between parts {:?}", g.len(), g.inter_colors);
                    for (i, part) in g.parts.iter().enumerate() {
                        say!("  A{i}: {part:?}");
                    }
                    say!("reduced coloring:");
                    for a in 0..g.len() {
                        let row: Vec<String> = (0..g.len())
                            .map(|b| if a == b { "-".to_string() } else { g.reduced.color(a, b).to_string() })
                            .collect();
                        say!("  {}", row.join(" "));
                    }
                }
                Format::Json => say!(
                    "{}",
                    json!({
                        "parts": g.parts,
                        "inter_colors": g.inter_colors,
                        "reduced": {"n": g.reduced.n(), "k": g.reduced.k(), "edge_colors": g.reduced.edge_colors()},
                    })
                ),
            }
            Ok(0)
        }
        Command::Search { vertices, targets, mode, budget, out, format } => {
            let report = match mode {
                Mode::Gallai => search_bad_gallai(vertices, &targets, budget.options()),
                Mode::Ramsey => {
                    let [t1, t2] = targets.as_slice() else {
                        return Err("ramsey mode needs exactly two targets".into());
                    };
                    match exhaustive_ramsey2(*t1, *t2, vertices, budget.options()) {
                        Err(Error::BudgetExceeded(spent)) => {
                            let claim = format!(
                                "every 2-coloring of K_{vertices} contains {t1} in color 1 or {t2} in color 2"
                            );
                            let mut r = VerdictReport::new(claim, Verdict::ExhaustedBudget);
                            r.stats.nodes = spent;
                            Ok(r)
                        }
                        other => other,
                    }
                }
            }
            .map_err(err)?;
            if let (Some(path), Some(Evidence::Coloring(c))) = (&out, &report.evidence) {
                let check = match mode {
                    Mode::Gallai => check_bad_coloring(c, &targets).map_err(err)?,
                    Mode::Ramsey => cert_report_for_ramsey(c, &targets)?,
                };
                let mut cert = Certificate::bad_coloring(c.clone(), targets.clone(), &check);
                if mode == Mode::Ramsey {
                    if let Some(claims) = cert.claims.as_mut() {
                        claims.gallai = false;
                    }
                }
                write_out(Some(path), &cert.serialize())?;
            }
            Ok(emit_report(&report, format))
        }
        Command::VerifyPoint { inst, budget, format } => {
            let inst = inst.instance().map_err(err)?;
            let report = verify_gr_point(&inst, budget.options()).map_err(err)?;
            Ok(emit_report(&report, format))
        }
        Command::Random { n, k, depth, seed, out } => {
            let c = random_gallai(n, k, depth, seed).map_err(err)?;
            write_out(out.as_deref(), &Certificate::plain(c).serialize())?;
            Ok(0)
        }
    }
}

/// Target-only check for a Ramsey witness, which need not be Gallai.
fn cert_report_for_ramsey(c: &gallai_core::ColoredComplete, targets: &[TargetSpec]) -> Result<VerdictReport, String> {
    let cert = Certificate {
        claims: Some(gallai_core::certificate::Claims {
            gallai: false,
            absent: targets.iter().enumerate().map(|(j, &t)| ((j + 1) as Color, t)).collect(),
        }),
        verification: Some(gallai_core::certificate::Verification {
            verdict: Verdict::Verified,
            tool: gallai_core::certificate::tool_id(),
            nodes: 0,
        }),
        targets: Some(targets.to_vec()),
        ..Certificate::plain(c.clone())
    };
    cert.verify(DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())
}
